#include <netchrono/dcr.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include <netchrono/errors.hpp>
#include <netchrono/random.hpp>

namespace netchrono {

ScoreTable differential_core_ranking(const UndirectedGraph &g, CentralityKind kind) {
    return differential_core_ranking(g, [kind](const UndirectedGraph &level) { return compute(level, kind); });
}

ScoreTable differential_core_ranking(const UndirectedGraph &g, const CentralityFunction &centrality) {
    if (g.empty())
        throw Error(Errc::EmptyGraph, "differential core ranking of an empty graph");

    auto score = [&centrality](const UndirectedGraph &graph) {
        ScoreTable t = centrality(graph);
        if (!std::equal(t.vertices().begin(), t.vertices().end(), graph.vertices().begin(), graph.vertices().end()))
            throw Error(Errc::SizeMismatch, "base centrality did not score exactly the level's vertices");
        return t;
    };

    std::vector<double> dcm(g.vertex_count(), 0.0);
    UndirectedGraph level = g;
    ScoreTable chi = score(level);

    while (!level.empty()) {
        std::size_t min_degree = level.degree_at(0);
        for (std::size_t i = 1; i < level.vertex_count(); ++i)
            min_degree = std::min(min_degree, level.degree_at(i));

        std::vector<Vertex> peeled;
        std::vector<char> is_peeled(level.vertex_count(), 0);
        for (std::size_t i = 0; i < level.vertex_count(); ++i) {
            if (level.degree_at(i) == min_degree) {
                peeled.push_back(level.label(i));
                is_peeled[i] = 1;
            }
        }

        UndirectedGraph next = remove_vertices(level, peeled);
        ScoreTable next_chi = next.empty() ? ScoreTable{} : score(next);

        // Labels in `level`, `next` and `g` are all ascending, so a single
        // forward cursor into each maps them without lookups.
        const auto chi_now = chi.scores();
        const auto chi_next = next_chi.scores();
        std::size_t in_g = 0, in_next = 0;
        for (std::size_t i = 0; i < level.vertex_count(); ++i) {
            const Vertex v = level.label(i);
            while (g.label(in_g) != v)
                ++in_g;
            if (is_peeled[i]) {
                dcm[in_g] += std::abs(chi_now[i]);
            } else {
                dcm[in_g] += std::abs(chi_next[in_next] - chi_now[i]);
                ++in_next;
            }
        }

        level = std::move(next);
        chi = std::move(next_chi);
    }

    const auto vs = g.vertices();
    return {std::vector<Vertex>(vs.begin(), vs.end()), std::move(dcm), MeasureTag::Dcm};
}

std::vector<Vertex> rank_descending(const ScoreTable &table) {
    const auto vs = table.vertices();
    const auto scores = table.scores();
    std::vector<std::size_t> idx(vs.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    // Ascending-label storage makes a stable sort on score alone break ties by label.
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    std::vector<Vertex> out;
    out.reserve(idx.size());
    for (const auto i : idx)
        out.push_back(vs[i]);
    return out;
}

std::vector<Vertex> rank_descending(const ScoreTable &table, std::uint64_t tie_seed) {
    const auto vs = table.vertices();
    const auto scores = table.scores();
    std::vector<std::size_t> idx(vs.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    Rng rng(tie_seed);
    for (std::size_t i = idx.size(); i > 1; --i)
        std::swap(idx[i - 1], idx[rng.below(i)]);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    std::vector<Vertex> out;
    out.reserve(idx.size());
    for (const auto i : idx)
        out.push_back(vs[i]);
    return out;
}

} // namespace netchrono
