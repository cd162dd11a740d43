#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace netchrono {

/// Vertex label. Labels are preserved across subgraph operations and need not
/// be contiguous.
using Vertex = std::uint32_t;
using VertexPair = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph with immutable, label-preserving storage.
 *
 * Vertices are kept sorted by label and adjacency is stored in CSR form over
 * vertex *indices* (positions in vertices()). The index-based accessors are
 * what the centrality kernels iterate over; the label-based accessors are for
 * everything else.
 */
class UndirectedGraph {
public:
    UndirectedGraph() = default;

    /// Builds the graph on `vertices` plus every endpoint in `edges`.
    /// Duplicate edges collapse; a self-loop throws Errc::SelfLoop.
    static UndirectedGraph build(std::span<const Vertex> vertices, std::span<const VertexPair> edges);

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
    bool empty() const noexcept { return labels_.empty(); }

    /// Labels in ascending order.
    std::span<const Vertex> vertices() const noexcept { return labels_; }

    std::optional<std::size_t> index_of(Vertex v) const noexcept;
    bool contains(Vertex v) const noexcept { return index_of(v).has_value(); }
    Vertex label(std::size_t index) const { return labels_[index]; }

    std::size_t degree_at(std::size_t index) const { return offsets_[index + 1] - offsets_[index]; }

    /// Neighbor indices of the vertex at `index`, ascending.
    std::span<const std::uint32_t> neighbors_at(std::size_t index) const {
        return {adjacency_.data() + offsets_[index], degree_at(index)};
    }

    std::size_t degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const noexcept;

    /// Every edge once as (smaller label, larger label), sorted.
    std::vector<VertexPair> edges() const;

    bool operator==(const UndirectedGraph &) const = default;

private:
    friend UndirectedGraph remove_vertices(const UndirectedGraph &g, std::span<const Vertex> removed);

    std::vector<Vertex> labels_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::uint32_t> adjacency_;
};

/// Graph containing exactly the distinct undirected edges of `pairs`.
UndirectedGraph from_edge_list(std::span<const VertexPair> pairs);

/// Induced subgraph on g.vertices() minus `removed`. Throws Errc::UnknownVertex
/// if `removed` names a label that is not in g.
UndirectedGraph remove_vertices(const UndirectedGraph &g, std::span<const Vertex> removed);

struct WeightedEdge {
    Vertex source;
    Vertex target;
    double weight;

    bool operator==(const WeightedEdge &) const = default;
};

/**
 * Directed graph whose edges carry a weight in [0.5, 1.0]. At most one of
 * (u, v) and (v, u) may be present. Edges are stored sorted by
 * (source, target).
 */
class WeightedDigraph {
public:
    WeightedDigraph() = default;
    WeightedDigraph(std::vector<Vertex> vertices, std::vector<WeightedEdge> edges);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    std::span<const WeightedEdge> edges() const noexcept { return edges_; }

    std::optional<std::size_t> index_of(Vertex v) const noexcept;
    std::optional<double> weight(Vertex source, Vertex target) const noexcept;

    /// Out-neighbor vertex indices per vertex index.
    std::vector<std::vector<std::uint32_t>> out_adjacency() const;

    bool operator==(const WeightedDigraph &) const = default;

private:
    std::vector<Vertex> vertices_;
    std::vector<WeightedEdge> edges_;
};

/// Strongly connected components. Each block is sorted ascending and blocks are
/// ordered by their smallest member.
std::vector<std::vector<Vertex>> strongly_connected_components(const WeightedDigraph &dg);

bool is_acyclic(const WeightedDigraph &dg);

/// An arrival order: a duplicate-free sequence of vertex labels.
class Chronology {
public:
    Chronology() = default;
    explicit Chronology(std::vector<Vertex> order);

    std::span<const Vertex> order() const noexcept { return order_; }
    std::size_t size() const noexcept { return order_.size(); }
    Vertex operator[](std::size_t i) const { return order_[i]; }

    /// Position of `v` in the order, if present.
    std::optional<std::size_t> index_of(Vertex v) const noexcept;

    /// True iff this is a permutation of exactly `vertices`.
    bool is_permutation_of(std::span<const Vertex> vertices) const;

    bool operator==(const Chronology &other) const { return order_ == other.order_; }

private:
    std::vector<Vertex> order_;
    std::unordered_map<Vertex, std::size_t> position_;
};

} // namespace netchrono
