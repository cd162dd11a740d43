#pragma once

// Fixture graphs and brute-force reference implementations shared by the unit
// tests and the acceptance runner. Nothing here calls into the algorithms it
// is used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include <netchrono/graph.hpp>

namespace netchrono::testing {

inline UndirectedGraph graph_of(std::vector<VertexPair> pairs) { return from_edge_list(pairs); }

inline UndirectedGraph path3() { return graph_of({{0, 1}, {1, 2}}); }
inline UndirectedGraph triangle() { return graph_of({{0, 1}, {1, 2}, {0, 2}}); }
inline UndirectedGraph star3() { return graph_of({{0, 1}, {0, 2}, {0, 3}}); } // center 0
inline UndirectedGraph cycle4() { return graph_of({{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

inline UndirectedGraph edgeless(std::size_t n) {
    std::vector<Vertex> vs(n);
    for (std::size_t i = 0; i < n; ++i)
        vs[i] = static_cast<Vertex>(i);
    return UndirectedGraph::build(vs, {});
}

/// G(n, p) on labels 0..n-1 (isolated vertices kept).
inline UndirectedGraph random_graph(std::size_t n, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Vertex> vs(n);
    std::vector<VertexPair> es;
    for (std::size_t i = 0; i < n; ++i) {
        vs[i] = static_cast<Vertex>(i);
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng))
                es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return UndirectedGraph::build(vs, es);
}

/// Random spanning tree plus G(n, p) extras, so always connected.
inline UndirectedGraph random_connected_graph(std::size_t n, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Vertex> vs(n);
    std::vector<VertexPair> es;
    for (std::size_t i = 0; i < n; ++i) {
        vs[i] = static_cast<Vertex>(i);
        if (i > 0)
            es.emplace_back(static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)),
                            static_cast<Vertex>(i));
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng))
                es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return UndirectedGraph::build(vs, es);
}

/// Betweenness by listing every shortest path of every unordered pair.
inline std::vector<double> brute_force_betweenness(const UndirectedGraph &g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> score(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<long> dist(n, -1);
        std::queue<std::size_t> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const auto v = q.front();
            q.pop();
            for (const auto w : g.neighbors_at(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        for (std::size_t t = s + 1; t < n; ++t) {
            if (dist[t] < 0)
                continue;
            std::vector<std::vector<std::size_t>> paths;
            std::vector<std::size_t> current{s};
            std::function<void(std::size_t)> walk = [&](std::size_t v) {
                if (v == t) {
                    paths.push_back(current);
                    return;
                }
                for (const auto w : g.neighbors_at(v))
                    if (dist[w] == dist[v] + 1) {
                        current.push_back(w);
                        walk(w);
                        current.pop_back();
                    }
            };
            walk(s);
            for (const auto &path : paths)
                for (std::size_t k = 1; k + 1 < path.size(); ++k)
                    score[path[k]] += 1.0 / static_cast<double>(paths.size());
        }
    }
    return score;
}

struct DenseEigen {
    std::vector<double> vector; ///< unit length, non-negative
    double value = 0.0;
};

/// Dominant eigenpair of the adjacency matrix by full symmetric decomposition.
inline DenseEigen dense_dominant_eigenvector(const UndirectedGraph &g) {
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (const auto j : g.neighbors_at(static_cast<std::size_t>(i)))
            a(i, static_cast<Eigen::Index>(j)) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    Eigen::VectorXd v = solver.eigenvectors().col(n - 1);
    if (v.sum() < 0)
        v = -v;
    v /= v.norm();
    DenseEigen out;
    out.value = solver.eigenvalues()(n - 1);
    out.vector.assign(v.data(), v.data() + n);
    return out;
}

/// Quadratic pair count.
inline double naive_eta(const std::vector<Vertex> &truth, const std::vector<Vertex> &predicted) {
    std::vector<std::size_t> pos(*std::max_element(truth.begin(), truth.end()) + 1);
    for (std::size_t i = 0; i < predicted.size(); ++i)
        pos[predicted[i]] = i;
    std::size_t agree = 0, pairs = 0;
    for (std::size_t i = 0; i < truth.size(); ++i)
        for (std::size_t j = i + 1; j < truth.size(); ++j, ++pairs)
            agree += pos[truth[i]] < pos[truth[j]];
    return static_cast<double>(agree) / static_cast<double>(pairs);
}

/// Quadratic bin-pair average.
inline double naive_bqm(const std::vector<Vertex> &truth, const std::vector<std::vector<Vertex>> &bins) {
    std::vector<std::size_t> pos(*std::max_element(truth.begin(), truth.end()) + 1);
    for (std::size_t i = 0; i < truth.size(); ++i)
        pos[truth[i]] = i;
    double total = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < bins.size(); ++i)
        for (std::size_t j = i + 1; j < bins.size(); ++j, ++pairs) {
            std::size_t ok = 0;
            for (const auto u : bins[i])
                for (const auto v : bins[j])
                    ok += pos[u] < pos[v];
            total += static_cast<double>(ok) / static_cast<double>(bins[i].size() * bins[j].size());
        }
    return total / static_cast<double>(pairs);
}

inline bool lighter(const WeightedEdge &a, const WeightedEdge &b) {
    return std::tie(a.weight, a.source, a.target) < std::tie(b.weight, b.source, b.target);
}

/// Literal loop: while cyclic, drop the lightest edge overall.
inline WeightedDigraph naive_break_global(const WeightedDigraph &dg) {
    std::vector<Vertex> vs(dg.vertices().begin(), dg.vertices().end());
    std::vector<WeightedEdge> es(dg.edges().begin(), dg.edges().end());
    WeightedDigraph cur(vs, es);
    while (!is_acyclic(cur)) {
        es.erase(std::min_element(es.begin(), es.end(), lighter));
        cur = WeightedDigraph(vs, es);
    }
    return cur;
}

/// Literal loop: while cyclic, drop the lightest edge inside a nontrivial SCC.
inline WeightedDigraph naive_break_on_cycles(const WeightedDigraph &dg) {
    std::vector<Vertex> vs(dg.vertices().begin(), dg.vertices().end());
    std::vector<WeightedEdge> es(dg.edges().begin(), dg.edges().end());
    WeightedDigraph cur(vs, es);
    while (!is_acyclic(cur)) {
        std::vector<std::size_t> block_of(*std::max_element(vs.begin(), vs.end()) + 1);
        const auto blocks = strongly_connected_components(cur);
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (const auto v : blocks[b])
                block_of[v] = b;
        auto best = es.end();
        for (auto it = es.begin(); it != es.end(); ++it)
            if (block_of[it->source] == block_of[it->target] && (best == es.end() || lighter(*it, *best)))
                best = it;
        es.erase(best);
        cur = WeightedDigraph(vs, es);
    }
    return cur;
}

/// Random tournament on 0..n-1 with weights that are multiples of 1/alpha.
inline WeightedDigraph random_tournament(std::size_t n, std::size_t alpha, std::mt19937_64 &rng) {
    std::vector<Vertex> vs(n);
    std::vector<WeightedEdge> es;
    std::uniform_int_distribution<std::size_t> count((alpha + 1) / 2, alpha);
    std::bernoulli_distribution flip(0.5);
    for (std::size_t i = 0; i < n; ++i) {
        vs[i] = static_cast<Vertex>(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double w = static_cast<double>(count(rng)) / static_cast<double>(alpha);
            auto u = static_cast<Vertex>(i), v = static_cast<Vertex>(j);
            if (w > 0.5 && flip(rng))
                std::swap(u, v);
            es.push_back({u, v, w});
        }
    }
    return WeightedDigraph(vs, es);
}

} // namespace netchrono::testing
