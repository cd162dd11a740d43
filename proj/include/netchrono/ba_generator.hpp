#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>

#include <netchrono/graph.hpp>

namespace netchrono {

struct BAConfig {
    std::size_t nodes = 0;       ///< final vertex count
    std::size_t connections = 1; ///< edges created by each arriving vertex
    std::uint64_t seed = 0;
};

/// A generated network together with its recorded arrival order.
struct BANetwork {
    UndirectedGraph graph;
    Chronology chronology;
};

/**
 * Grows a Barabasi-Albert network.
 *
 * Starts from the complete graph on labels 0..c-1; vertex u = c..n-1 then
 * arrives and links to c distinct existing vertices, each drawn with
 * probability proportional to degree at u's arrival (draws that hit an
 * already-chosen target are redrawn). The chronology is 0..n-1.
 *
 * Throws Errc::InvalidConfig unless nodes > connections >= 1.
 */
BANetwork generate_ba(const BAConfig &cfg);

/// Same network under a seeded random relabeling; the chronology is carried
/// through the permutation. Keeps labels from encoding arrival order.
BANetwork shuffle_labels(const BANetwork &network, std::uint64_t seed);

struct DegreeDistribution {
    std::map<std::size_t, std::size_t> histogram; ///< degree -> vertex count
    std::optional<double> gamma_estimate;         ///< fitted exponent of P(k) ~ c k^-gamma
    std::optional<double> normalization;          ///< fitted c
};

DegreeDistribution degree_histogram(const UndirectedGraph &g);

/// Log-log least-squares fit of the degree PMF over the contiguous run of
/// nonzero-count degrees starting at the first populated degree >= k_min.
/// Throws Errc::InsufficientSupport if that run has fewer than 3 degrees.
DegreeDistribution estimate_power_law_exponent(const DegreeDistribution &d, std::size_t k_min);

} // namespace netchrono
