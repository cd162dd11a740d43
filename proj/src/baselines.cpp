#include <netchrono/baselines.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <unordered_set>

#include <netchrono/dcr.hpp>
#include <netchrono/errors.hpp>

namespace netchrono {

BinOrdering::BinOrdering(std::vector<std::vector<Vertex>> bins) : bins_(std::move(bins)) {
    std::unordered_set<Vertex> seen;
    for (std::size_t i = 0; i < bins_.size(); ++i) {
        auto &bin = bins_[i];
        if (bin.empty())
            throw Error(Errc::NotAPartition, "bin " + std::to_string(i) + " is empty");
        std::sort(bin.begin(), bin.end());
        for (const Vertex v : bin)
            if (!seen.insert(v).second)
                throw Error(Errc::NotAPartition, "vertex " + std::to_string(v) + " appears in more than one bin");
    }
}

std::size_t BinOrdering::vertex_count() const noexcept {
    std::size_t total = 0;
    for (const auto &bin : bins_)
        total += bin.size();
    return total;
}

bool BinOrdering::partitions(std::span<const Vertex> vertices) const {
    if (vertices.size() != vertex_count())
        return false;
    std::unordered_set<Vertex> expected(vertices.begin(), vertices.end());
    for (const auto &bin : bins_)
        for (const Vertex v : bin)
            if (!expected.contains(v))
                return false;
    return true;
}

BinOrdering degree_bins(const UndirectedGraph &g) {
    if (g.empty())
        throw Error(Errc::EmptyGraph, "degree binning of an empty graph");
    std::map<std::size_t, std::vector<Vertex>, std::greater<>> by_degree;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        by_degree[g.degree_at(i)].push_back(g.label(i));
    std::vector<std::vector<Vertex>> bins;
    bins.reserve(by_degree.size());
    for (auto &[degree, members] : by_degree)
        bins.push_back(std::move(members));
    return BinOrdering(std::move(bins));
}

BinOrdering centrality_bins(const ScoreTable &scores, std::size_t delta) {
    const std::size_t n = scores.size();
    if (delta < 1 || delta > n)
        throw Error(Errc::InvalidDelta,
                    "bin count " + std::to_string(delta) + " outside [1, " + std::to_string(n) + "]");
    const auto ranked = rank_descending(scores);
    const std::size_t base = n / delta;
    const std::size_t extra = n % delta;
    std::vector<std::vector<Vertex>> bins(delta);
    std::size_t cursor = 0;
    for (std::size_t b = 0; b < delta; ++b) {
        const std::size_t size = base + (b < extra ? 1 : 0);
        bins[b].assign(ranked.begin() + static_cast<std::ptrdiff_t>(cursor),
                       ranked.begin() + static_cast<std::ptrdiff_t>(cursor + size));
        cursor += size;
    }
    return BinOrdering(std::move(bins));
}

BinOrdering centrality_bins(const UndirectedGraph &g, CentralityKind kind, std::size_t delta) {
    return centrality_bins(compute(g, kind), delta);
}

Chronology ranking_to_chronology(const UndirectedGraph &g, CentralityKind kind) {
    if (g.empty())
        throw Error(Errc::EmptyGraph, "ranking an empty graph");
    return Chronology(rank_descending(compute(g, kind)));
}

} // namespace netchrono
