#include <netchrono/experiments.hpp>

#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include <netchrono/baselines.hpp>
#include <netchrono/dcr.hpp>
#include <netchrono/errors.hpp>
#include <netchrono/parallel.hpp>
#include <netchrono/random.hpp>

namespace netchrono {

namespace {

std::vector<std::size_t> sweep_points(const SweepOptions &opts) {
    if (opts.step == 0)
        throw Error(Errc::InvalidConfig, "sweep step must be positive");
    if (opts.from > opts.to)
        throw Error(Errc::InvalidConfig, "sweep range is reversed (from " + std::to_string(opts.from) + " to " +
                                             std::to_string(opts.to) + ")");
    if (opts.repeats == 0)
        throw Error(Errc::InvalidConfig, "sweep needs at least one repeat");
    std::vector<std::size_t> points;
    for (std::size_t x = opts.from; x <= opts.to; x += opts.step) {
        const std::size_t n = opts.mode == SweepMode::Nodes ? x : opts.nodes;
        const std::size_t c = opts.mode == SweepMode::Nodes ? opts.connections : x;
        if (c < 1 || n <= c)
            throw Error(Errc::InvalidConfig, "sweep point needs nodes > connections >= 1 (nodes=" + std::to_string(n) +
                                                 ", connections=" + std::to_string(c) + ")");
        points.push_back(x);
    }
    return points;
}

std::pair<double, double> mean_and_std(std::span<const double> values) {
    double mean = 0.0;
    for (const double v : values)
        mean += v;
    mean /= static_cast<double>(values.size());
    if (values.size() < 2)
        return {mean, 0.0};
    double ss = 0.0;
    for (const double v : values)
        ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

nlohmann::json bins_to_json(const BinOrdering &bins) {
    auto out = nlohmann::json::array();
    for (const auto &bin : bins.bins())
        out.push_back(bin);
    return out;
}

} // namespace

BANetwork sweep_reference(const SweepOptions &opts, std::size_t point, std::size_t repeat) {
    const auto points = sweep_points(opts);
    const std::size_t x = points.at(point);
    const std::size_t n = opts.mode == SweepMode::Nodes ? x : opts.nodes;
    const std::size_t c = opts.mode == SweepMode::Nodes ? opts.connections : x;
    const std::uint64_t seed = derive_seed(opts.seed, point * opts.repeats + repeat);
    BANetwork net = generate_ba({n, c, seed});
    if (opts.shuffle_labels)
        net = shuffle_labels(net, mix64(seed));
    return net;
}

std::vector<SweepRow> run_sweep(const SweepOptions &opts, std::size_t jobs) {
    const auto points = sweep_points(opts);
    const std::size_t tasks = points.size() * opts.repeats;
    std::vector<double> eta_plain(tasks), eta_dcr(tasks);

    parallel_for(tasks, jobs, [&](std::size_t t) {
        const BANetwork ref = sweep_reference(opts, t / opts.repeats, t % opts.repeats);
        const Chronology plain = ranking_to_chronology(ref.graph, opts.kind);
        const Chronology differential(rank_descending(differential_core_ranking(ref.graph, opts.kind)));
        eta_plain[t] = eta_pairs(ref.chronology, plain);
        eta_dcr[t] = eta_pairs(ref.chronology, differential);
    });

    std::vector<SweepRow> rows;
    rows.reserve(points.size());
    for (std::size_t p = 0; p < points.size(); ++p) {
        const std::span<const double> plain(eta_plain.data() + p * opts.repeats, opts.repeats);
        const std::span<const double> dcr(eta_dcr.data() + p * opts.repeats, opts.repeats);
        SweepRow row;
        row.x = points[p];
        std::tie(row.eta_plain_mean, row.eta_plain_std) = mean_and_std(plain);
        std::tie(row.eta_dcr_mean, row.eta_dcr_std) = mean_and_std(dcr);
        rows.push_back(row);
    }
    return rows;
}

void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows) {
    out << "x,eta_plain_mean,eta_dcr_mean,eta_plain_std,eta_dcr_std\n";
    const auto old_precision = out.precision();
    out << std::setprecision(17);
    for (const auto &r : rows)
        out << r.x << ',' << r.eta_plain_mean << ',' << r.eta_dcr_mean << ',' << r.eta_plain_std << ','
            << r.eta_dcr_std << '\n';
    out.precision(old_precision);
}

BinComparison compare_bins(const UndirectedGraph &g_m, const Chronology &truth, const PipelineConfig &cfg,
                           std::size_t jobs) {
    if (!truth.is_permutation_of(g_m.vertices()))
        throw Error(Errc::SizeMismatch, "true chronology does not cover the reference network's vertices");

    BinComparison cmp;
    cmp.reconstruction = reconstruct(g_m, cfg, jobs);
    cmp.delta = cmp.reconstruction.bins.delta();
    cmp.bqm_dcr = bqm(truth, cmp.reconstruction.bins);
    cmp.bqm_degree = bqm(truth, centrality_bins(g_m, CentralityKind::Degree, cmp.delta));
    cmp.bqm_betweenness = bqm(truth, centrality_bins(g_m, CentralityKind::Betweenness, cmp.delta));
    cmp.bqm_eigenvector = bqm(truth, centrality_bins(g_m, CentralityKind::Eigenvector, cmp.delta));
    const BinOrdering by_degree = degree_bins(g_m);
    cmp.degree_bin_count = by_degree.delta();
    cmp.bqm_degree_bins = by_degree.delta() >= 2 ? bqm(truth, by_degree) : 0.0;
    return cmp;
}

nlohmann::json config_to_json(const PipelineConfig &cfg) {
    return {{"alpha", cfg.alpha},
            {"connections", cfg.connections},
            {"centrality", std::string(name_of(cfg.kind))},
            {"seed", cfg.master_seed},
            {"cycle_removal", std::string(name_of(cfg.cycle_removal))}};
}

nlohmann::json reconstruction_to_json(const UndirectedGraph &g_m, const PipelineConfig &cfg,
                                      const Reconstruction &result, const Chronology *truth) {
    nlohmann::json doc;
    doc["config"] = config_to_json(cfg);
    doc["config"]["vertices"] = g_m.vertex_count();
    doc["config"]["edges"] = g_m.edge_count();
    doc["bins"] = bins_to_json(result.bins);
    doc["delta"] = result.bins.delta();
    doc["reference_rank"] = result.reference_rank;
    doc["digraph_summary"] = {{"vertices", result.digraph.vertex_count()},
                              {"edges", result.digraph.edge_count()},
                              {"removed_edges", result.removed_edges}};

    doc["metrics"] = {{"bqm", nullptr}, {"eta_pairs", nullptr}};
    doc["bucket_table"] = nlohmann::json::array();
    if (truth) {
        if (result.bins.delta() >= 2)
            doc["metrics"]["bqm"] = bqm(*truth, result.bins);
        if (truth->size() >= 2)
            doc["metrics"]["eta_pairs"] = eta_pairs(*truth, Chronology(result.reference_rank));
        for (const auto &row : probability_bucket_table(result.digraph, *truth)) {
            doc["bucket_table"].push_back({{"low", row.range_low},
                                           {"high", row.range_high},
                                           {"edge_fraction", row.edge_fraction},
                                           {"correct_fraction", row.correct_fraction},
                                           {"count", row.edge_count}});
        }
    }
    return doc;
}

nlohmann::json comparison_to_json(const PipelineConfig &cfg, const BinComparison &cmp) {
    nlohmann::json doc;
    doc["config"] = config_to_json(cfg);
    doc["delta"] = cmp.delta;
    doc["bins"] = bins_to_json(cmp.reconstruction.bins);
    doc["bqm"] = {{"dcr", cmp.bqm_dcr},
                  {"degree", cmp.bqm_degree},
                  {"betweenness", cmp.bqm_betweenness},
                  {"eigenvector", cmp.bqm_eigenvector}};
    doc["degree_binning"] = {{"bins", cmp.degree_bin_count}, {"bqm", cmp.bqm_degree_bins}};
    doc["dcr_beats_baselines"] = cmp.dcr_beats_baselines();
    return doc;
}

EvaluatedMetrics evaluate_result(const nlohmann::json &doc, const Chronology &truth) {
    EvaluatedMetrics metrics;
    try {
        BinOrdering bins(doc.at("bins").get<std::vector<std::vector<Vertex>>>());
        metrics.bqm = bqm(truth, bins);
        if (doc.contains("reference_rank"))
            metrics.eta_pairs = eta_pairs(truth, Chronology(doc.at("reference_rank").get<std::vector<Vertex>>()));
    } catch (const nlohmann::json::exception &e) {
        throw Error(Errc::Parse, std::string("malformed result document: ") + e.what());
    }
    return metrics;
}

} // namespace netchrono
