#include <netchrono/reconstruction.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_map>

#include <netchrono/dcr.hpp>
#include <netchrono/errors.hpp>
#include <netchrono/parallel.hpp>
#include <netchrono/random.hpp>

namespace netchrono {

namespace {

void validate(const PipelineConfig &cfg) {
    if (cfg.alpha < 1)
        throw Error(Errc::InvalidConfig, "alpha must be at least 1");
    if (cfg.connections < 1)
        throw Error(Errc::InvalidConfig, "connections must be at least 1");
}

BANetwork synthetic_network(std::size_t n, const PipelineConfig &cfg, std::size_t index) {
    return generate_ba({n, cfg.connections, synthetic_seed(cfg, index)});
}

} // namespace

std::string_view name_of(CycleRemoval mode) noexcept {
    return mode == CycleRemoval::GlobalMinimum ? "global" : "cycle-edges";
}

std::optional<CycleRemoval> parse_cycle_removal(std::string_view name) noexcept {
    if (name == "global")
        return CycleRemoval::GlobalMinimum;
    if (name == "cycle-edges")
        return CycleRemoval::CycleEdgesOnly;
    return std::nullopt;
}

std::uint64_t synthetic_seed(const PipelineConfig &cfg, std::size_t index) noexcept {
    return derive_seed(cfg.master_seed, index);
}

SyntheticBatch synthesize(std::size_t n, const PipelineConfig &cfg, std::size_t jobs) {
    validate(cfg);
    if (n <= cfg.connections)
        throw Error(Errc::InvalidConfig, "synthetic networks need more vertices than connections");
    SyntheticBatch batch(cfg.alpha);
    parallel_for(cfg.alpha, jobs, [&](std::size_t i) { batch[i] = synthetic_network(n, cfg, i + 1); });
    return batch;
}

Chronology map_and_predict(std::span<const Vertex> ref_rank, std::span<const Vertex> syn_rank,
                           const Chronology &syn_chronology) {
    if (ref_rank.size() != syn_rank.size() || syn_rank.size() != syn_chronology.size())
        throw Error(Errc::SizeMismatch, "reference rank, synthetic rank and chronology differ in length (" +
                                            std::to_string(ref_rank.size()) + ", " + std::to_string(syn_rank.size()) +
                                            ", " + std::to_string(syn_chronology.size()) + ")");
    std::unordered_map<Vertex, std::size_t> rank_position;
    rank_position.reserve(syn_rank.size());
    for (std::size_t k = 0; k < syn_rank.size(); ++k)
        if (!rank_position.emplace(syn_rank[k], k).second)
            throw Error(Errc::SizeMismatch, "synthetic rank repeats vertex " + std::to_string(syn_rank[k]));

    std::vector<Vertex> predicted;
    predicted.reserve(syn_chronology.size());
    for (const Vertex w : syn_chronology.order()) {
        const auto it = rank_position.find(w);
        if (it == rank_position.end())
            throw Error(Errc::SizeMismatch,
                        "synthetic chronology vertex " + std::to_string(w) + " is missing from the synthetic rank");
        predicted.push_back(ref_rank[it->second]);
    }
    // The Chronology constructor rejects a reference rank with duplicates.
    return Chronology(std::move(predicted));
}

WeightedDigraph pairwise_digraph(std::span<const Chronology> pred_lists, std::size_t alpha) {
    if (alpha == 0)
        throw Error(Errc::EmptyBatch, "pairwise digraph needs at least one prediction list");
    if (pred_lists.size() != alpha)
        throw Error(Errc::SizeMismatch, "expected " + std::to_string(alpha) + " prediction lists, got " +
                                            std::to_string(pred_lists.size()));

    const auto first = pred_lists.front().order();
    std::vector<Vertex> vertices(first.begin(), first.end());
    std::sort(vertices.begin(), vertices.end());
    const std::size_t n = vertices.size();

    // position[v * alpha + l] = index of vertex v (by sorted index) in list l.
    std::vector<std::uint32_t> position(n * alpha);
    for (std::size_t l = 0; l < alpha; ++l) {
        const auto order = pred_lists[l].order();
        if (order.size() != n)
            throw Error(Errc::SizeMismatch, "prediction list " + std::to_string(l) + " has the wrong length");
        for (std::size_t k = 0; k < n; ++k) {
            const auto it = std::lower_bound(vertices.begin(), vertices.end(), order[k]);
            if (it == vertices.end() || *it != order[k])
                throw Error(Errc::SizeMismatch, "prediction list " + std::to_string(l) + " has a foreign vertex " +
                                                    std::to_string(order[k]));
            position[static_cast<std::size_t>(it - vertices.begin()) * alpha + l] = static_cast<std::uint32_t>(k);
        }
    }

    const double a = static_cast<double>(alpha);
    std::vector<WeightedEdge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::size_t u = 0; u < n; ++u) {
        const std::uint32_t *pu = &position[u * alpha];
        for (std::size_t v = u + 1; v < n; ++v) {
            const std::uint32_t *pv = &position[v * alpha];
            std::size_t before = 0;
            for (std::size_t l = 0; l < alpha; ++l)
                before += pu[l] < pv[l];
            // Integer comparison keeps the 0.5 boundary exact.
            if (2 * before >= alpha)
                edges.push_back({vertices[u], vertices[v], static_cast<double>(before) / a});
            else
                edges.push_back({vertices[v], vertices[u], static_cast<double>(alpha - before) / a});
        }
    }
    return WeightedDigraph(std::move(vertices), std::move(edges));
}

namespace {

std::vector<std::size_t> by_weight(std::span<const WeightedEdge> edges, std::vector<std::size_t> ids) {
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(edges[a].weight, edges[a].source, edges[a].target) <
               std::tie(edges[b].weight, edges[b].source, edges[b].target);
    });
    return ids;
}

WeightedDigraph keep_unremoved(const WeightedDigraph &dg, const std::vector<char> &removed) {
    const auto edges = dg.edges();
    std::vector<WeightedEdge> kept;
    kept.reserve(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (!removed[e])
            kept.push_back(edges[e]);
    const auto vs = dg.vertices();
    return WeightedDigraph(std::vector<Vertex>(vs.begin(), vs.end()), std::move(kept));
}

// Removing the k lightest edges one at a time until acyclic stops at the
// smallest k whose suffix is acyclic; acyclicity is monotone in k, so bisect.
WeightedDigraph break_cycles_global(const WeightedDigraph &dg) {
    const std::size_t n = dg.vertex_count();
    const auto edges = dg.edges();
    std::vector<std::uint32_t> source_index(edges.size()), target_index(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        source_index[e] = static_cast<std::uint32_t>(*dg.index_of(edges[e].source));
        target_index[e] = static_cast<std::uint32_t>(*dg.index_of(edges[e].target));
    }
    std::vector<std::size_t> all(edges.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    const auto order = by_weight(edges, std::move(all));

    std::vector<std::uint32_t> indegree(n), offsets(n + 1), targets(edges.size()), ready;
    const auto acyclic_after = [&](std::size_t k) {
        std::fill(offsets.begin(), offsets.end(), 0U);
        std::fill(indegree.begin(), indegree.end(), 0U);
        for (std::size_t i = k; i < order.size(); ++i) {
            ++offsets[source_index[order[i]] + 1];
            ++indegree[target_index[order[i]]];
        }
        for (std::size_t v = 0; v < n; ++v)
            offsets[v + 1] += offsets[v];
        std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
        for (std::size_t i = k; i < order.size(); ++i)
            targets[fill[source_index[order[i]]]++] = target_index[order[i]];
        ready.clear();
        for (std::uint32_t v = 0; v < n; ++v)
            if (indegree[v] == 0)
                ready.push_back(v);
        std::size_t done = 0;
        while (!ready.empty()) {
            const auto v = ready.back();
            ready.pop_back();
            ++done;
            for (auto j = offsets[v]; j < offsets[v + 1]; ++j)
                if (--indegree[targets[j]] == 0)
                    ready.push_back(targets[j]);
        }
        return done == n;
    };

    std::size_t lo = 0, hi = order.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (acyclic_after(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    std::vector<char> removed(edges.size(), 0);
    for (std::size_t i = 0; i < lo; ++i)
        removed[order[i]] = 1;
    return keep_unremoved(dg, removed);
}

WeightedDigraph break_cycles_on_cycles(const WeightedDigraph &dg) {
    const std::size_t n = dg.vertex_count();
    const auto edges = dg.edges();
    auto adj = dg.out_adjacency(); // rows ascending, since edges are sorted by (source, target)

    std::vector<std::uint32_t> source_index(edges.size()), target_index(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        source_index[e] = static_cast<std::uint32_t>(*dg.index_of(edges[e].source));
        target_index[e] = static_cast<std::uint32_t>(*dg.index_of(edges[e].target));
    }

    // Component ids, with member lists so a split only re-examines one block.
    const auto scc_of = [&](std::span<const std::uint32_t> members, std::vector<std::uint32_t> &comp,
                            std::vector<std::vector<std::uint32_t>> &blocks) {
        // Iterative Tarjan restricted to `members` (all sharing one old id).
        constexpr auto kUnvisited = std::numeric_limits<std::uint32_t>::max();
        std::vector<std::uint32_t> local(n, kUnvisited);
        for (std::uint32_t i = 0; i < members.size(); ++i)
            local[members[i]] = i;
        const std::size_t m = members.size();
        std::vector<std::uint32_t> index(m, kUnvisited), low(m, 0);
        std::vector<char> on_stack(m, 0);
        std::vector<std::uint32_t> stack;
        std::vector<std::pair<std::uint32_t, std::size_t>> call;
        std::uint32_t counter = 0;
        for (std::uint32_t root = 0; root < m; ++root) {
            if (index[root] != kUnvisited)
                continue;
            call.emplace_back(root, 0);
            index[root] = low[root] = counter++;
            stack.push_back(root);
            on_stack[root] = 1;
            while (!call.empty()) {
                auto &[v, next] = call.back();
                const auto &row = adj[members[v]];
                bool descended = false;
                while (next < row.size()) {
                    const auto w = local[row[next++]];
                    if (w == kUnvisited)
                        continue;
                    if (index[w] == kUnvisited) {
                        index[w] = low[w] = counter++;
                        stack.push_back(w);
                        on_stack[w] = 1;
                        call.emplace_back(w, 0);
                        descended = true;
                        break;
                    }
                    if (on_stack[w])
                        low[v] = std::min(low[v], index[w]);
                }
                if (descended)
                    continue;
                const auto done = call.back().first;
                if (low[done] == index[done]) {
                    const auto id = static_cast<std::uint32_t>(blocks.size());
                    blocks.emplace_back();
                    std::uint32_t w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[members[w]] = id;
                        blocks.back().push_back(members[w]);
                    } while (w != done);
                }
                call.pop_back();
                if (!call.empty())
                    low[call.back().first] = std::min(low[call.back().first], low[done]);
            }
        }
    };

    std::vector<std::uint32_t> comp(n, 0);
    std::vector<std::vector<std::uint32_t>> blocks;
    {
        std::vector<std::uint32_t> all(n);
        std::iota(all.begin(), all.end(), 0U);
        scc_of(all, comp, blocks);
    }

    std::vector<std::size_t> on_cycle;
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (comp[source_index[e]] == comp[target_index[e]])
            on_cycle.push_back(e);
    const auto candidates = by_weight(edges, std::move(on_cycle));

    std::vector<std::uint32_t> seen(n, 0);
    std::uint32_t stamp = 0;
    std::vector<std::uint32_t> queue;
    const auto reaches = [&](std::uint32_t from, std::uint32_t to) {
        const auto block = comp[from];
        ++stamp;
        queue.clear();
        queue.push_back(from);
        seen[from] = stamp;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const auto w : adj[queue[head]]) {
                if (w == to)
                    return true;
                if (seen[w] != stamp && comp[w] == block) {
                    seen[w] = stamp;
                    queue.push_back(w);
                }
            }
        }
        return false;
    };

    // Deleting edges never creates a cycle, so an edge that is acyclic when its
    // turn comes stays acyclic; one ordered pass replays the greedy loop.
    std::vector<char> removed(edges.size(), 0);
    for (const auto e : candidates) {
        const auto u = source_index[e];
        const auto v = target_index[e];
        if (comp[u] != comp[v])
            continue;
        auto &row = adj[u];
        row.erase(std::lower_bound(row.begin(), row.end(), v));
        removed[e] = 1;
        if (!reaches(u, v)) {
            const auto old = std::move(blocks[comp[u]]);
            scc_of(old, comp, blocks);
        }
    }

    return keep_unremoved(dg, removed);
}

} // namespace

WeightedDigraph break_cycles(const WeightedDigraph &dg, CycleRemoval mode) {
    return mode == CycleRemoval::GlobalMinimum ? break_cycles_global(dg) : break_cycles_on_cycles(dg);
}

BinOrdering bin_by_indegree(const WeightedDigraph &dag) {
    if (!is_acyclic(dag))
        throw Error(Errc::CyclicInput, "in-degree binning needs an acyclic graph");
    const std::size_t n = dag.vertex_count();
    const auto adj = dag.out_adjacency();
    std::vector<std::size_t> indegree(n, 0);
    for (const auto &row : adj)
        for (const auto w : row)
            ++indegree[w];

    std::vector<char> alive(n, 1);
    std::size_t remaining = n;
    std::vector<std::vector<Vertex>> bins;
    std::vector<std::uint32_t> batch;
    while (remaining > 0) {
        std::size_t min_in = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < n; ++i)
            if (alive[i])
                min_in = std::min(min_in, indegree[i]);
        batch.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (alive[i] && indegree[i] == min_in)
                batch.push_back(static_cast<std::uint32_t>(i));

        std::vector<Vertex> bin;
        bin.reserve(batch.size());
        for (const auto i : batch) {
            alive[i] = 0;
            bin.push_back(dag.vertices()[i]);
        }
        for (const auto i : batch)
            for (const auto w : adj[i])
                --indegree[w];
        remaining -= batch.size();
        bins.push_back(std::move(bin));
    }
    return BinOrdering(std::move(bins));
}

Reconstruction reconstruct(const UndirectedGraph &g_m, const PipelineConfig &cfg, std::size_t jobs) {
    validate(cfg);
    if (g_m.empty())
        throw Error(Errc::EmptyGraph, "reference network is empty");
    const std::size_t n = g_m.vertex_count();
    if (n <= cfg.connections)
        throw Error(Errc::InvalidConfig, "reference network needs more vertices than connections");

    Reconstruction result;
    const ScoreTable reference = differential_core_ranking(g_m, cfg.kind);
    result.reference_rank = rank_descending(reference);

    std::vector<Chronology> predictions(cfg.alpha);
    parallel_for(cfg.alpha, jobs, [&](std::size_t i) {
        const std::uint64_t seed = synthetic_seed(cfg, i + 1);
        const BANetwork synthetic = generate_ba({n, cfg.connections, seed});
        const auto syn_rank = rank_descending(differential_core_ranking(synthetic.graph, cfg.kind), derive_seed(seed, 2));
        const auto ref_rank = rank_descending(reference, derive_seed(seed, 1));
        predictions[i] = map_and_predict(ref_rank, syn_rank, synthetic.chronology);
    });

    result.digraph = pairwise_digraph(predictions, cfg.alpha);
    const WeightedDigraph dag = break_cycles(result.digraph, cfg.cycle_removal);
    result.removed_edges = result.digraph.edge_count() - dag.edge_count();
    result.bins = bin_by_indegree(dag);
    return result;
}

} // namespace netchrono
