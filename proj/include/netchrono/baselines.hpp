#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <netchrono/centrality.hpp>
#include <netchrono/graph.hpp>

namespace netchrono {

/// Ordered sequence of disjoint, nonempty vertex sets; earlier bins are
/// predicted to have arrived earlier. Each bin is stored sorted by label.
class BinOrdering {
public:
    BinOrdering() = default;
    /// Throws Errc::NotAPartition if a bin is empty or a vertex repeats.
    explicit BinOrdering(std::vector<std::vector<Vertex>> bins);

    std::size_t delta() const noexcept { return bins_.size(); }
    std::size_t vertex_count() const noexcept;
    const std::vector<std::vector<Vertex>> &bins() const noexcept { return bins_; }
    std::span<const Vertex> operator[](std::size_t i) const { return bins_[i]; }

    /// True iff the union of bins is exactly `vertices`.
    bool partitions(std::span<const Vertex> vertices) const;

    bool operator==(const BinOrdering &) const = default;

private:
    std::vector<std::vector<Vertex>> bins_;
};

/// One bin per distinct degree, highest degree first. Throws Errc::EmptyGraph.
BinOrdering degree_bins(const UndirectedGraph &g);

/// Vertices ranked by descending score (ties by label) and cut into `delta`
/// contiguous bins whose sizes differ by at most one, larger bins first.
/// Throws Errc::InvalidDelta unless 1 <= delta <= |V|.
BinOrdering centrality_bins(const ScoreTable &scores, std::size_t delta);
BinOrdering centrality_bins(const UndirectedGraph &g, CentralityKind kind, std::size_t delta);

/// The full descending-centrality order (ties by label). Throws Errc::EmptyGraph.
Chronology ranking_to_chronology(const UndirectedGraph &g, CentralityKind kind);

} // namespace netchrono
