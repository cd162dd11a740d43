#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <netchrono/centrality.hpp>
#include <netchrono/graph.hpp>

namespace netchrono {

using CentralityFunction = std::function<ScoreTable(const UndirectedGraph &)>;

/**
 * Differential core ranking.
 *
 * Repeatedly peels every minimum-degree vertex from the graph. At each level a
 * surviving vertex accumulates |chi(next level) - chi(this level)| and a removed
 * vertex accumulates |chi(this level)|, until nothing is left. Each level's
 * centrality is computed once and reused as the next level's baseline.
 *
 * Returns a ScoreTable tagged MeasureTag::Dcm. Throws Errc::EmptyGraph on an
 * empty graph and propagates errors from the centrality.
 */
ScoreTable differential_core_ranking(const UndirectedGraph &g, CentralityKind kind);

/// As above with an arbitrary base centrality.
ScoreTable differential_core_ranking(const UndirectedGraph &g, const CentralityFunction &centrality);

/// Vertices by descending score, ties by ascending label.
std::vector<Vertex> rank_descending(const ScoreTable &table);

/// Vertices by descending score, ties in a random order drawn from `tie_seed`.
std::vector<Vertex> rank_descending(const ScoreTable &table, std::uint64_t tie_seed);

} // namespace netchrono
