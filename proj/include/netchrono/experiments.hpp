#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include <netchrono/centrality.hpp>
#include <netchrono/evaluation.hpp>
#include <netchrono/graph.hpp>
#include <netchrono/reconstruction.hpp>

namespace netchrono {

// ---------------------------------------------------------------------------
// Plain vs. differential ranking sweeps

enum class SweepMode { Nodes, Connections };

struct SweepOptions {
    SweepMode mode = SweepMode::Nodes;
    std::size_t from = 100;
    std::size_t to = 500;
    std::size_t step = 100;
    std::size_t nodes = 1000;     ///< fixed N when sweeping connections
    std::size_t connections = 3;  ///< fixed C when sweeping nodes
    CentralityKind kind = CentralityKind::Betweenness;
    std::size_t repeats = 5;
    std::uint64_t seed = 0;
    bool shuffle_labels = true;   ///< relabel each reference so labels carry no arrival information
};

struct SweepRow {
    std::size_t x = 0;
    double eta_plain_mean = 0.0;
    double eta_dcr_mean = 0.0;
    double eta_plain_std = 0.0;
    double eta_dcr_std = 0.0;
};

/// Reference network for sweep point `point`, repeat `repeat`.
BANetwork sweep_reference(const SweepOptions &opts, std::size_t point, std::size_t repeat);

/// One row per sweep point, in sweep order. Throws Errc::InvalidConfig on an
/// empty or reversed range, zero step or repeats, or a point with N <= C.
std::vector<SweepRow> run_sweep(const SweepOptions &opts, std::size_t jobs = 0);

void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows);

// ---------------------------------------------------------------------------
// Pipeline bins vs. equal-count centrality bins

struct BinComparison {
    Reconstruction reconstruction;
    std::size_t delta = 0;
    double bqm_dcr = 0.0;
    double bqm_degree = 0.0;       ///< centrality_bins(degree, delta)
    double bqm_betweenness = 0.0;  ///< centrality_bins(betweenness, delta)
    double bqm_eigenvector = 0.0;  ///< centrality_bins(eigenvector, delta)
    std::size_t degree_bin_count = 0;
    double bqm_degree_bins = 0.0;  ///< variable-count degree binning

    bool dcr_beats_baselines() const noexcept {
        return bqm_dcr > bqm_degree && bqm_dcr > bqm_betweenness && bqm_dcr > bqm_eigenvector;
    }
};

BinComparison compare_bins(const UndirectedGraph &g_m, const Chronology &truth, const PipelineConfig &cfg,
                           std::size_t jobs = 0);

// ---------------------------------------------------------------------------
// Result documents

nlohmann::json config_to_json(const PipelineConfig &cfg);

/// {"config", "bins", "delta", "reference_rank", "digraph_summary",
///  "metrics": {"bqm", "eta_pairs"}, "bucket_table"}. Metrics are null and the
/// bucket table empty when no truth is supplied.
nlohmann::json reconstruction_to_json(const UndirectedGraph &g_m, const PipelineConfig &cfg,
                                      const Reconstruction &result, const Chronology *truth);

nlohmann::json comparison_to_json(const PipelineConfig &cfg, const BinComparison &cmp);

struct EvaluatedMetrics {
    double bqm = 0.0;
    std::optional<double> eta_pairs;
};

/// Recomputes the metrics of a reconstruction document against `truth`.
/// Throws Errc::Parse on a malformed document.
EvaluatedMetrics evaluate_result(const nlohmann::json &doc, const Chronology &truth);

} // namespace netchrono
