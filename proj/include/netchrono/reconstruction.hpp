#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <netchrono/ba_generator.hpp>
#include <netchrono/baselines.hpp>
#include <netchrono/centrality.hpp>
#include <netchrono/graph.hpp>

namespace netchrono {

/**
 * How break_cycles makes the precedence graph acyclic.
 *
 * GlobalMinimum deletes edges in increasing weight order, whether or not they
 * lie on a cycle, until no cycle is left; every edge below the final cut-off
 * goes. CycleEdgesOnly deletes only the lightest edge that currently lies on a
 * cycle.
 */
enum class CycleRemoval { GlobalMinimum, CycleEdgesOnly };

std::string_view name_of(CycleRemoval mode) noexcept;
std::optional<CycleRemoval> parse_cycle_removal(std::string_view name) noexcept;

struct PipelineConfig {
    std::size_t alpha = 50;       ///< number of synthetic networks
    std::size_t connections = 3;  ///< BA connections of the reference network
    CentralityKind kind = CentralityKind::Betweenness;
    std::uint64_t master_seed = 0;
    CycleRemoval cycle_removal = CycleRemoval::GlobalMinimum;
};

using SyntheticBatch = std::vector<BANetwork>;

/// Seed of the synthetic network with 1-based `index`.
std::uint64_t synthetic_seed(const PipelineConfig &cfg, std::size_t index) noexcept;

/// `cfg.alpha` BA networks on `n` vertices; network i (1-based) is grown from
/// synthetic_seed(cfg, i). Throws Errc::InvalidConfig.
SyntheticBatch synthesize(std::size_t n, const PipelineConfig &cfg, std::size_t jobs = 0);

/**
 * Maps a synthetic chronology onto the reference vertices: the synthetic
 * vertex at rank position k stands for ref_rank[k], and the result lists
 * those stand-ins in the synthetic arrival order.
 *
 * Throws Errc::SizeMismatch unless the three sequences have equal length and
 * syn_rank / syn_chronology are permutations of the same set.
 */
Chronology map_and_predict(std::span<const Vertex> ref_rank, std::span<const Vertex> syn_rank,
                           const Chronology &syn_chronology);

/**
 * Tournament of pairwise precedence frequencies. For each pair the edge points
 * from the vertex that precedes more often, weighted by that fraction; exact
 * ties point from the smaller label with weight 0.5.
 *
 * Throws Errc::EmptyBatch if alpha is 0, Errc::SizeMismatch if the list count
 * differs from alpha or the lists are not permutations of one vertex set.
 */
WeightedDigraph pairwise_digraph(std::span<const Chronology> pred_lists, std::size_t alpha);

/// Deletes edges, lightest first (ties by smallest (source, target)), until the
/// graph is acyclic. An acyclic input is returned unchanged in either mode.
WeightedDigraph break_cycles(const WeightedDigraph &dg, CycleRemoval mode = CycleRemoval::GlobalMinimum);

/// Repeatedly bins every remaining vertex of minimum in-degree (counted within
/// the remaining subgraph). Throws Errc::CyclicInput on a cyclic graph.
BinOrdering bin_by_indegree(const WeightedDigraph &dag);

struct Reconstruction {
    BinOrdering bins;
    WeightedDigraph digraph;            ///< before cycle removal
    std::size_t removed_edges = 0;      ///< edges deleted by break_cycles
    std::vector<Vertex> reference_rank; ///< DCR ranking of the reference network
};

/**
 * End-to-end arrival-order reconstruction of `g_m`. Deterministic in `cfg`
 * regardless of `jobs` (0 = default_jobs()).
 *
 * For the mapping against synthetic network i, both that network's ranking and
 * the reference ranking break score ties in a random order seeded from
 * synthetic_seed(cfg, i), independently per network.
 */
Reconstruction reconstruct(const UndirectedGraph &g_m, const PipelineConfig &cfg, std::size_t jobs = 0);

} // namespace netchrono
