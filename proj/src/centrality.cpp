#include <netchrono/centrality.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <netchrono/errors.hpp>

namespace netchrono {

std::string_view name_of(CentralityKind kind) noexcept {
    switch (kind) {
    case CentralityKind::Degree: return "degree";
    case CentralityKind::Betweenness: return "betweenness";
    case CentralityKind::Eigenvector: return "eigenvector";
    }
    return "unknown";
}

std::string_view name_of(MeasureTag tag) noexcept {
    switch (tag) {
    case MeasureTag::Degree: return "degree";
    case MeasureTag::Betweenness: return "betweenness";
    case MeasureTag::Eigenvector: return "eigenvector";
    case MeasureTag::Dcm: return "dcm";
    }
    return "unknown";
}

std::optional<CentralityKind> parse_centrality_kind(std::string_view name) noexcept {
    if (name == "degree")
        return CentralityKind::Degree;
    if (name == "betweenness")
        return CentralityKind::Betweenness;
    if (name == "eigenvector" || name == "eigen")
        return CentralityKind::Eigenvector;
    return std::nullopt;
}

ScoreTable::ScoreTable(std::vector<Vertex> vertices, std::vector<double> scores, MeasureTag tag,
                       std::optional<double> dominant_eigenvalue)
    : vertices_(std::move(vertices)), scores_(std::move(scores)), tag_(tag), eigenvalue_(dominant_eigenvalue) {
    if (vertices_.size() != scores_.size())
        throw Error(Errc::SizeMismatch, "score table has " + std::to_string(vertices_.size()) + " vertices but " +
                                            std::to_string(scores_.size()) + " scores");
    for (const double s : scores_)
        if (!std::isfinite(s))
            throw Error(Errc::InvalidConfig, "score table contains a non-finite score");
    if (!std::is_sorted(vertices_.begin(), vertices_.end())) {
        std::vector<std::size_t> perm(vertices_.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
            perm[i] = i;
        std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return vertices_[a] < vertices_[b]; });
        std::vector<Vertex> vs(perm.size());
        std::vector<double> ss(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
            vs[i] = vertices_[perm[i]];
            ss[i] = scores_[perm[i]];
        }
        vertices_ = std::move(vs);
        scores_ = std::move(ss);
    }
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw Error(Errc::DuplicateVertex, "score table lists a vertex twice");
}

double ScoreTable::score(Vertex v) const {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        throw Error(Errc::UnknownVertex, "no score for vertex " + std::to_string(v));
    return scores_[static_cast<std::size_t>(it - vertices_.begin())];
}

ScoreTable ScoreTable::scaled(double factor) const {
    ScoreTable out = *this;
    for (auto &s : out.scores_)
        s *= factor;
    return out;
}

namespace {

std::vector<Vertex> labels_of(const UndirectedGraph &g) {
    const auto vs = g.vertices();
    return {vs.begin(), vs.end()};
}

} // namespace

ScoreTable degree_centrality(const UndirectedGraph &g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> scores(n, 0.0);
    if (n >= 2) {
        const double denom = static_cast<double>(n - 1);
        for (std::size_t i = 0; i < n; ++i)
            scores[i] = static_cast<double>(g.degree_at(i)) / denom;
    }
    return {labels_of(g), std::move(scores), MeasureTag::Degree};
}

ScoreTable betweenness_centrality(const UndirectedGraph &g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> centrality(n, 0.0);

    std::vector<double> sigma(n), delta(n);
    std::vector<std::int64_t> dist(n);
    std::vector<std::uint32_t> order; // BFS visitation order, reused as the stack
    order.reserve(n);

    for (std::size_t s = 0; s < n; ++s) {
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        std::fill(dist.begin(), dist.end(), -1);
        order.clear();

        sigma[s] = 1.0;
        dist[s] = 0;
        order.push_back(static_cast<std::uint32_t>(s));
        for (std::size_t head = 0; head < order.size(); ++head) {
            const auto v = order[head];
            for (const auto w : g.neighbors_at(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[v] + 1)
                    sigma[w] += sigma[v];
            }
        }

        // Dependency accumulation in reverse BFS order; predecessors of w are
        // the neighbors one level closer to s.
        for (std::size_t k = order.size(); k-- > 1;) {
            const auto w = order[k];
            const double coeff = (1.0 + delta[w]) / sigma[w];
            for (const auto v : g.neighbors_at(w))
                if (dist[v] == dist[w] - 1)
                    delta[v] += sigma[v] * coeff;
            centrality[w] += delta[w];
        }
    }

    // Each unordered pair was counted from both endpoints.
    for (auto &c : centrality)
        c *= 0.5;
    return {labels_of(g), std::move(centrality), MeasureTag::Betweenness};
}

ScoreTable eigenvector_centrality(const UndirectedGraph &g, double tolerance, std::size_t max_iterations) {
    if (!(tolerance > 0.0) || max_iterations < 1)
        throw Error(Errc::InvalidConfig, "eigenvector centrality needs tolerance > 0 and max_iterations >= 1");

    const std::size_t n = g.vertex_count();
    if (g.edge_count() == 0)
        return {labels_of(g), std::vector<double>(n, 0.0), MeasureTag::Eigenvector, 0.0};

    auto multiply = [&](const std::vector<double> &x, std::vector<double> &out) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (const auto j : g.neighbors_at(i))
                acc += x[j];
            out[i] = acc;
        }
    };

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> ax(n), next(n);
    double diff = std::numeric_limits<double>::infinity();
    for (std::size_t iter = 0; iter < max_iterations; ++iter) {
        multiply(x, ax);
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = x[i] + ax[i];
            norm += next[i] * next[i];
        }
        norm = std::sqrt(norm);
        diff = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] /= norm;
            diff = std::max(diff, std::abs(next[i] - x[i]));
        }
        x.swap(next);
        // The eigen-residual of A is about `norm` times the step size, so the
        // step is driven below tolerance / norm before stopping early.
        if (diff * norm <= tolerance)
            break;
    }
    if (diff > tolerance)
        throw Error(Errc::NoConvergence, "power iteration did not reach tolerance " + std::to_string(tolerance) +
                                             " within " + std::to_string(max_iterations) + " iterations");

    multiply(x, ax);
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        lambda += x[i] * ax[i];
    return {labels_of(g), std::move(x), MeasureTag::Eigenvector, lambda};
}

ScoreTable compute(const UndirectedGraph &g, CentralityKind kind) {
    switch (kind) {
    case CentralityKind::Degree: return degree_centrality(g);
    case CentralityKind::Betweenness: return betweenness_centrality(g);
    case CentralityKind::Eigenvector: return eigenvector_centrality(g);
    }
    throw Error(Errc::InvalidConfig, "unknown centrality kind");
}

} // namespace netchrono
