#include <netchrono/graph.hpp>

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

#include <netchrono/errors.hpp>

namespace netchrono {

namespace {

std::string label_str(Vertex v) { return std::to_string(v); }

} // namespace

UndirectedGraph UndirectedGraph::build(std::span<const Vertex> vertices, std::span<const VertexPair> edges) {
    UndirectedGraph g;
    g.labels_.assign(vertices.begin(), vertices.end());
    g.labels_.reserve(vertices.size() + 2 * edges.size());
    for (const auto &[u, v] : edges) {
        if (u == v)
            throw Error(Errc::SelfLoop, "self-loop on vertex " + label_str(u));
        g.labels_.push_back(u);
        g.labels_.push_back(v);
    }
    std::sort(g.labels_.begin(), g.labels_.end());
    g.labels_.erase(std::unique(g.labels_.begin(), g.labels_.end()), g.labels_.end());
    g.labels_.shrink_to_fit();

    // Directed half-edges as index pairs, sorted and deduplicated, give CSR rows.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> half;
    half.reserve(2 * edges.size());
    for (const auto &[u, v] : edges) {
        const auto iu = static_cast<std::uint32_t>(*g.index_of(u));
        const auto iv = static_cast<std::uint32_t>(*g.index_of(v));
        half.emplace_back(iu, iv);
        half.emplace_back(iv, iu);
    }
    std::sort(half.begin(), half.end());
    half.erase(std::unique(half.begin(), half.end()), half.end());

    g.offsets_.assign(g.labels_.size() + 1, 0);
    g.adjacency_.reserve(half.size());
    for (const auto &[from, to] : half) {
        ++g.offsets_[from + 1];
        g.adjacency_.push_back(to);
    }
    for (std::size_t i = 0; i < g.labels_.size(); ++i)
        g.offsets_[i + 1] += g.offsets_[i];
    return g;
}

std::optional<std::size_t> UndirectedGraph::index_of(Vertex v) const noexcept {
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v)
        return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t UndirectedGraph::degree(Vertex v) const {
    const auto i = index_of(v);
    if (!i)
        throw Error(Errc::UnknownVertex, "vertex " + label_str(v) + " not in graph");
    return degree_at(*i);
}

std::vector<Vertex> UndirectedGraph::neighbors(Vertex v) const {
    const auto i = index_of(v);
    if (!i)
        throw Error(Errc::UnknownVertex, "vertex " + label_str(v) + " not in graph");
    std::vector<Vertex> out;
    out.reserve(degree_at(*i));
    for (const auto j : neighbors_at(*i))
        out.push_back(labels_[j]);
    return out;
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const noexcept {
    const auto iu = index_of(u);
    const auto iv = index_of(v);
    if (!iu || !iv)
        return false;
    const auto nb = neighbors_at(*iu);
    return std::binary_search(nb.begin(), nb.end(), static_cast<std::uint32_t>(*iv));
}

std::vector<VertexPair> UndirectedGraph::edges() const {
    std::vector<VertexPair> out;
    out.reserve(edge_count());
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (const auto j : neighbors_at(i))
            if (j > i)
                out.emplace_back(labels_[i], labels_[j]);
    return out;
}

UndirectedGraph from_edge_list(std::span<const VertexPair> pairs) {
    return UndirectedGraph::build({}, pairs);
}

UndirectedGraph remove_vertices(const UndirectedGraph &g, std::span<const Vertex> removed) {
    const std::size_t n = g.vertex_count();
    std::vector<char> drop(n, 0);
    for (const Vertex v : removed) {
        const auto i = g.index_of(v);
        if (!i)
            throw Error(Errc::UnknownVertex, "cannot remove vertex " + label_str(v) + ": not in graph");
        drop[*i] = 1;
    }

    constexpr auto kGone = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> remap(n, kGone);
    UndirectedGraph out;
    out.labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!drop[i]) {
            remap[i] = static_cast<std::uint32_t>(out.labels_.size());
            out.labels_.push_back(g.labels_[i]);
        }
    }
    out.offsets_.assign(out.labels_.size() + 1, 0);
    out.adjacency_.reserve(g.adjacency_.size());
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (drop[i])
            continue;
        // Remapping is monotone, so neighbor rows stay sorted.
        for (const auto j : g.neighbors_at(i))
            if (remap[j] != kGone)
                out.adjacency_.push_back(remap[j]);
        out.offsets_[++row] = out.adjacency_.size();
    }
    return out;
}

WeightedDigraph::WeightedDigraph(std::vector<Vertex> vertices, std::vector<WeightedEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw Error(Errc::DuplicateVertex, "digraph vertex list contains duplicates");

    for (const auto &e : edges_) {
        if (e.source == e.target)
            throw Error(Errc::SelfLoop, "self-loop on vertex " + label_str(e.source));
        if (!index_of(e.source) || !index_of(e.target))
            throw Error(Errc::UnknownVertex,
                        "edge " + label_str(e.source) + "->" + label_str(e.target) + " has an unknown endpoint");
        if (!(e.weight >= 0.5 && e.weight <= 1.0))
            throw Error(Errc::InvalidWeight, "edge weight " + std::to_string(e.weight) + " outside [0.5, 1]");
    }

    // One edge per unordered pair.
    std::vector<VertexPair> keys;
    keys.reserve(edges_.size());
    for (const auto &e : edges_)
        keys.emplace_back(std::min(e.source, e.target), std::max(e.source, e.target));
    std::sort(keys.begin(), keys.end());
    if (const auto it = std::adjacent_find(keys.begin(), keys.end()); it != keys.end())
        throw Error(Errc::DuplicateEdge,
                    "more than one edge between " + label_str(it->first) + " and " + label_str(it->second));

    std::sort(edges_.begin(), edges_.end(), [](const WeightedEdge &a, const WeightedEdge &b) {
        return std::tie(a.source, a.target) < std::tie(b.source, b.target);
    });
}

std::optional<std::size_t> WeightedDigraph::index_of(Vertex v) const noexcept {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<double> WeightedDigraph::weight(Vertex source, Vertex target) const noexcept {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), VertexPair{source, target},
                                     [](const WeightedEdge &e, const VertexPair &key) {
                                         return std::tie(e.source, e.target) < std::tie(key.first, key.second);
                                     });
    if (it == edges_.end() || it->source != source || it->target != target)
        return std::nullopt;
    return it->weight;
}

std::vector<std::vector<std::uint32_t>> WeightedDigraph::out_adjacency() const {
    std::vector<std::vector<std::uint32_t>> out(vertices_.size());
    for (const auto &e : edges_)
        out[*index_of(e.source)].push_back(static_cast<std::uint32_t>(*index_of(e.target)));
    return out;
}

namespace {

/// Iterative Tarjan over index adjacency; returns a component id per vertex.
std::vector<std::uint32_t> tarjan(const std::vector<std::vector<std::uint32_t>> &adj, std::size_t &components) {
    constexpr auto kUnvisited = std::numeric_limits<std::uint32_t>::max();
    const std::size_t n = adj.size();
    std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
    std::vector<char> on_stack(n, 0);
    std::vector<std::uint32_t> stack;
    std::vector<std::pair<std::uint32_t, std::size_t>> call; // (vertex, next edge)
    std::uint32_t counter = 0;
    components = 0;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited)
            continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto &[v, next] = call.back();
            if (next < adj[v].size()) {
                const auto w = adj[v][next++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const auto done = v;
            if (low[done] == index[done]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = static_cast<std::uint32_t>(components);
                } while (w != done);
                ++components;
            }
            call.pop_back();
            if (!call.empty())
                low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    return comp;
}

} // namespace

std::vector<std::vector<Vertex>> strongly_connected_components(const WeightedDigraph &dg) {
    std::size_t count = 0;
    const auto comp = tarjan(dg.out_adjacency(), count);
    std::vector<std::vector<Vertex>> blocks(count);
    // Vertices are visited in ascending label order, so every block is sorted.
    for (std::size_t i = 0; i < comp.size(); ++i)
        blocks[comp[i]].push_back(dg.vertices()[i]);
    std::sort(blocks.begin(), blocks.end(),
              [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return blocks;
}

bool is_acyclic(const WeightedDigraph &dg) {
    // Self-loops are rejected at construction, so singleton SCCs suffice.
    std::size_t count = 0;
    tarjan(dg.out_adjacency(), count);
    return count == dg.vertex_count();
}

Chronology::Chronology(std::vector<Vertex> order) : order_(std::move(order)) {
    position_.reserve(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i)
        if (!position_.emplace(order_[i], i).second)
            throw Error(Errc::DuplicateVertex, "chronology lists vertex " + label_str(order_[i]) + " twice");
}

std::optional<std::size_t> Chronology::index_of(Vertex v) const noexcept {
    const auto it = position_.find(v);
    if (it == position_.end())
        return std::nullopt;
    return it->second;
}

bool Chronology::is_permutation_of(std::span<const Vertex> vertices) const {
    if (vertices.size() != order_.size())
        return false;
    return std::all_of(vertices.begin(), vertices.end(), [this](Vertex v) { return position_.contains(v); });
}

} // namespace netchrono
