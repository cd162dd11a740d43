#include <netchrono/ba_generator.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <netchrono/errors.hpp>
#include <netchrono/random.hpp>

namespace netchrono {

BANetwork generate_ba(const BAConfig &cfg) {
    const std::size_t n = cfg.nodes;
    const std::size_t c = cfg.connections;
    if (c < 1 || n <= c)
        throw Error(Errc::InvalidConfig, "BA model needs nodes > connections >= 1 (got nodes=" + std::to_string(n) +
                                             ", connections=" + std::to_string(c) + ")");

    Rng rng(cfg.seed);
    std::vector<VertexPair> edges;
    edges.reserve(c * (c - 1) / 2 + (n - c) * c);
    for (Vertex u = 0; u < c; ++u)
        for (Vertex v = u + 1; v < c; ++v)
            edges.emplace_back(u, v);

    // Every edge contributes both endpoints, so a uniform draw from `ends`
    // selects a vertex with probability degree / (2 |E|).
    std::vector<Vertex> ends;
    ends.reserve(2 * edges.capacity());
    for (const auto &[u, v] : edges) {
        ends.push_back(u);
        ends.push_back(v);
    }

    std::vector<Vertex> targets;
    targets.reserve(c);
    for (std::size_t arrival = c; arrival < n; ++arrival) {
        const auto u = static_cast<Vertex>(arrival);
        const std::size_t snapshot = ends.size();
        targets.clear();
        while (targets.size() < c) {
            // Only K_1 (c == 1, first arrival) has no edges; its single vertex is the target.
            const Vertex v = snapshot == 0 ? static_cast<Vertex>(rng.below(arrival)) : ends[rng.below(snapshot)];
            if (std::find(targets.begin(), targets.end(), v) == targets.end())
                targets.push_back(v);
        }
        for (const Vertex v : targets) {
            edges.emplace_back(v, u);
            ends.push_back(v);
            ends.push_back(u);
        }
    }

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    return {UndirectedGraph::build(order, edges), Chronology(order)};
}

BANetwork shuffle_labels(const BANetwork &network, std::uint64_t seed) {
    const auto vs = network.graph.vertices();
    std::vector<Vertex> image(vs.begin(), vs.end());
    Rng rng(seed);
    // Fisher-Yates with the portable bounded draw.
    for (std::size_t i = image.size(); i > 1; --i)
        std::swap(image[i - 1], image[rng.below(i)]);

    auto relabel = [&](Vertex v) { return image[*network.graph.index_of(v)]; };
    std::vector<VertexPair> edges = network.graph.edges();
    for (auto &[u, v] : edges) {
        u = relabel(u);
        v = relabel(v);
    }
    std::vector<Vertex> order;
    order.reserve(network.chronology.size());
    for (const Vertex v : network.chronology.order())
        order.push_back(relabel(v));
    return {UndirectedGraph::build(image, edges), Chronology(std::move(order))};
}

DegreeDistribution degree_histogram(const UndirectedGraph &g) {
    DegreeDistribution d;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        ++d.histogram[g.degree_at(i)];
    return d;
}

DegreeDistribution estimate_power_law_exponent(const DegreeDistribution &d, std::size_t k_min) {
    std::size_t total = 0;
    for (const auto &[k, count] : d.histogram)
        total += count;

    // The fit stops at the first empty degree.
    std::vector<std::pair<double, double>> points;
    auto it = d.histogram.lower_bound(std::max<std::size_t>(k_min, 1));
    while (it != d.histogram.end() && it->second == 0)
        ++it;
    for (std::size_t expected = it == d.histogram.end() ? 0 : it->first;
         it != d.histogram.end() && it->first == expected && it->second > 0; ++it, ++expected) {
        points.emplace_back(std::log(static_cast<double>(it->first)),
                            std::log(static_cast<double>(it->second) / static_cast<double>(total)));
    }
    if (points.size() < 3)
        throw Error(Errc::InsufficientSupport, "power-law fit needs at least 3 consecutive populated degrees >= " +
                                                   std::to_string(k_min) + ", found " +
                                                   std::to_string(points.size()));

    const double m = static_cast<double>(points.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto &[x, y] : points) {
        mean_x += x;
        mean_y += y;
    }
    mean_x /= m;
    mean_y /= m;
    double sxy = 0.0, sxx = 0.0;
    for (const auto &[x, y] : points) {
        sxy += (x - mean_x) * (y - mean_y);
        sxx += (x - mean_x) * (x - mean_x);
    }
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;

    DegreeDistribution out = d;
    out.gamma_estimate = -slope;
    out.normalization = std::exp(intercept);
    return out;
}

} // namespace netchrono
