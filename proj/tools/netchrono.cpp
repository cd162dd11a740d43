// netchrono: generate BA networks, reconstruct arrival order, run sweeps.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <netchrono/ba_generator.hpp>
#include <netchrono/errors.hpp>
#include <netchrono/experiments.hpp>
#include <netchrono/io.hpp>
#include <netchrono/parallel.hpp>
#include <netchrono/random.hpp>
#include <netchrono/reconstruction.hpp>

namespace fs = std::filesystem;
using namespace netchrono;

namespace {

const std::map<std::string, CentralityKind> kCentralityNames{
    {"degree", CentralityKind::Degree},
    {"betweenness", CentralityKind::Betweenness},
    {"eigenvector", CentralityKind::Eigenvector},
};

void write_json(const fs::path &path, const nlohmann::json &doc) {
    std::ofstream out(path);
    if (!out)
        throw Error(Errc::Io, "cannot open " + path.string() + " for writing");
    out << doc.dump(2) << '\n';
    out.flush();
    if (!out)
        throw Error(Errc::Io, "failed writing " + path.string());
}

struct GenerateArgs {
    std::size_t nodes = 0;
    std::size_t connections = 0;
    std::uint64_t seed = 0;
    fs::path out;
    fs::path chronology;
    bool shuffle = false;
    bool gamma = false;
    std::size_t k_min = 0;
};

int run_generate(const GenerateArgs &args) {
    BANetwork net = generate_ba({args.nodes, args.connections, args.seed});
    if (args.shuffle)
        net = shuffle_labels(net, mix64(args.seed));
    io::write_edge_list(args.out, net.graph);
    if (!args.chronology.empty())
        io::write_chronology(args.chronology, net.chronology);

    const DegreeDistribution hist = degree_histogram(net.graph);
    std::cout << "vertices: " << net.graph.vertex_count() << '\n'
              << "edges: " << net.graph.edge_count() << '\n'
              << "degree: min " << hist.histogram.begin()->first << ", max " << hist.histogram.rbegin()->first
              << ", distinct " << hist.histogram.size() << '\n';
    if (args.gamma) {
        const auto fit = estimate_power_law_exponent(hist, args.k_min == 0 ? args.connections : args.k_min);
        std::cout << "gamma: " << *fit.gamma_estimate << '\n' << "normalization: " << *fit.normalization << '\n';
    }
    return 0;
}

struct ReconstructArgs {
    fs::path graph;
    fs::path truth;
    fs::path out;
    PipelineConfig cfg;
    std::size_t jobs = 0;
};

int run_reconstruct(const ReconstructArgs &args) {
    const UndirectedGraph g = io::read_edge_list(args.graph);
    std::optional<Chronology> truth;
    if (!args.truth.empty())
        truth = io::read_chronology(args.truth);
    const Reconstruction result = reconstruct(g, args.cfg, args.jobs);
    const auto doc = reconstruction_to_json(g, args.cfg, result, truth ? &*truth : nullptr);
    write_json(args.out, doc);
    std::cout << "bins: " << result.bins.delta() << '\n';
    if (truth && doc["metrics"]["bqm"].is_number())
        std::cout << "bqm: " << doc["metrics"]["bqm"].get<double>() << '\n';
    return 0;
}

int run_compare(const ReconstructArgs &args) {
    const UndirectedGraph g = io::read_edge_list(args.graph);
    const Chronology truth = io::read_chronology(args.truth);
    const BinComparison cmp = compare_bins(g, truth, args.cfg, args.jobs);
    write_json(args.out, comparison_to_json(args.cfg, cmp));
    std::cout << "delta: " << cmp.delta << '\n'
              << "bqm dcr: " << cmp.bqm_dcr << '\n'
              << "bqm degree: " << cmp.bqm_degree << '\n'
              << "bqm betweenness: " << cmp.bqm_betweenness << '\n'
              << "bqm eigenvector: " << cmp.bqm_eigenvector << '\n'
              << "degree binning: " << cmp.degree_bin_count << " bins, bqm " << cmp.bqm_degree_bins << '\n';
    return 0;
}

int run_sweep_cmd(const SweepOptions &opts, const fs::path &out, std::size_t jobs) {
    const auto rows = run_sweep(opts, jobs);
    if (out.empty()) {
        write_sweep_csv(std::cout, rows);
        return 0;
    }
    std::ofstream file(out);
    if (!file)
        throw Error(Errc::Io, "cannot open " + out.string() + " for writing");
    write_sweep_csv(file, rows);
    file.flush();
    if (!file)
        throw Error(Errc::Io, "failed writing " + out.string());
    return 0;
}

int run_evaluate(const fs::path &result, const fs::path &truth_path) {
    std::ifstream in(result);
    if (!in)
        throw Error(Errc::Io, "cannot open " + result.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw Error(Errc::Parse, e.what());
    }
    const auto metrics = evaluate_result(doc, io::read_chronology(truth_path));
    std::cout.precision(17);
    std::cout << "bqm: " << metrics.bqm << '\n';
    if (metrics.eta_pairs)
        std::cout << "eta_pairs: " << *metrics.eta_pairs << '\n';
    return 0;
}

void add_pipeline_options(CLI::App *cmd, ReconstructArgs &args, bool truth_required) {
    cmd->add_option("--graph", args.graph, "Reference network edge list")->required()->check(CLI::ExistingFile);
    auto *truth = cmd->add_option("--truth", args.truth, "True chronology file")->check(CLI::ExistingFile);
    if (truth_required)
        truth->required();
    cmd->add_option("--connections", args.cfg.connections, "BA connections of the reference network")->required();
    cmd->add_option("--alpha", args.cfg.alpha, "Number of synthetic networks")->capture_default_str();
    cmd->add_option("--centrality", args.cfg.kind, "Base centrality")
        ->transform(CLI::CheckedTransformer(kCentralityNames, CLI::ignore_case))
        ->default_str("betweenness");
    cmd->add_option("--seed", args.cfg.master_seed, "Master seed")->capture_default_str();
    cmd->add_option("--cycle-removal", args.cfg.cycle_removal,
                    "Edges deleted to break cycles: lightest overall, or lightest on a cycle")
        ->transform(CLI::CheckedTransformer(std::map<std::string, CycleRemoval>{
            {"global", CycleRemoval::GlobalMinimum}, {"cycle-edges", CycleRemoval::CycleEdgesOnly}}))
        ->default_str("global");
    cmd->add_option("--out", args.out, "Result JSON path")->required();
    cmd->add_option("--jobs", args.jobs, "Worker threads (default: NETCHRONO_JOBS or hardware threads)");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Arrival-order reconstruction for preferential-attachment networks"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto *generate = app.add_subcommand("generate", "Grow a Barabasi-Albert network");
    generate->add_option("--nodes", gen.nodes, "Final vertex count")->required();
    generate->add_option("--connections", gen.connections, "Edges per arriving vertex")->required();
    generate->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
    generate->add_option("--out", gen.out, "Edge-list output path")->required();
    generate->add_option("--chronology", gen.chronology, "Arrival-order output path");
    generate->add_flag("--shuffle", gen.shuffle, "Relabel vertices randomly so labels do not reveal arrival order");
    generate->add_flag("--gamma", gen.gamma, "Fit the power-law exponent of the degree distribution");
    generate->add_option("--kmin", gen.k_min, "Smallest degree in the fit (default: connections)");

    ReconstructArgs rec;
    auto *reconstruct_cmd = app.add_subcommand("reconstruct", "Predict arrival-order bins of a network");
    add_pipeline_options(reconstruct_cmd, rec, false);

    ReconstructArgs cmp;
    auto *compare = app.add_subcommand("compare-bins", "Compare pipeline bins against centrality binning");
    add_pipeline_options(compare, cmp, true);

    SweepOptions sweep;
    fs::path sweep_out;
    std::size_t sweep_jobs = 0;
    auto *sweep_cmd = app.add_subcommand("sweep", "Plain vs. differential ranking accuracy over N or C");
    sweep_cmd->add_option("--mode", sweep.mode, "Swept parameter")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, SweepMode>{{"nodes", SweepMode::Nodes}, {"connections", SweepMode::Connections}}))
        ->required();
    sweep_cmd->add_option("--from", sweep.from, "First value")->required();
    sweep_cmd->add_option("--to", sweep.to, "Last value (inclusive)")->required();
    sweep_cmd->add_option("--step", sweep.step, "Increment")->capture_default_str();
    sweep_cmd->add_option("--nodes", sweep.nodes, "Fixed node count in connections mode")->capture_default_str();
    sweep_cmd->add_option("--connections", sweep.connections, "Fixed connections in nodes mode")
        ->capture_default_str();
    sweep_cmd->add_option("--centrality", sweep.kind, "Base centrality")
        ->transform(CLI::CheckedTransformer(kCentralityNames, CLI::ignore_case))
        ->default_str("betweenness");
    sweep_cmd->add_option("--repeats", sweep.repeats, "Reference networks per point")->capture_default_str();
    sweep_cmd->add_option("--seed", sweep.seed, "Master seed")->capture_default_str();
    sweep_cmd->add_option("--out", sweep_out, "CSV output path (default: stdout)");
    sweep_cmd->add_option("--jobs", sweep_jobs, "Worker threads");
    bool keep_labels = false;
    sweep_cmd->add_flag("--keep-labels", keep_labels, "Do not relabel reference networks");

    fs::path eval_result, eval_truth;
    auto *evaluate = app.add_subcommand("evaluate", "Recompute metrics of a reconstruct result file");
    evaluate->add_option("--result", eval_result, "Result JSON")->required()->check(CLI::ExistingFile);
    evaluate->add_option("--truth", eval_truth, "True chronology")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*generate)
            return run_generate(gen);
        if (*reconstruct_cmd)
            return run_reconstruct(rec);
        if (*compare)
            return run_compare(cmp);
        if (*sweep_cmd) {
            sweep.shuffle_labels = !keep_labels;
            return run_sweep_cmd(sweep, sweep_out, sweep_jobs);
        }
        if (*evaluate)
            return run_evaluate(eval_result, eval_truth);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
