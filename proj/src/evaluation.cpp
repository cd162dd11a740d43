#include <netchrono/evaluation.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include <netchrono/errors.hpp>

namespace netchrono {

namespace {

/// Truth positions of each vertex of `order`, in order. Throws SizeMismatch if
/// a vertex is missing from truth.
std::vector<std::size_t> truth_positions(const Chronology &truth, std::span<const Vertex> order) {
    std::vector<std::size_t> out;
    out.reserve(order.size());
    for (const Vertex v : order) {
        const auto p = truth.index_of(v);
        if (!p)
            throw Error(Errc::SizeMismatch, "vertex " + std::to_string(v) + " is not in the true chronology");
        out.push_back(*p);
    }
    return out;
}

/// Counts pairs i < j with values[i] < values[j] by merge sort.
std::size_t count_ascending_pairs(std::vector<std::size_t> values) {
    std::vector<std::size_t> buffer(values.size());
    std::size_t agreeing = 0;
    for (std::size_t width = 1; width < values.size(); width *= 2) {
        for (std::size_t lo = 0; lo < values.size(); lo += 2 * width) {
            const std::size_t mid = std::min(lo + width, values.size());
            const std::size_t hi = std::min(lo + 2 * width, values.size());
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                if (values[i] < values[j]) {
                    agreeing += hi - j; // values[i] precedes everything left on the right
                    buffer[k++] = values[i++];
                } else {
                    buffer[k++] = values[j++];
                }
            }
            while (i < mid)
                buffer[k++] = values[i++];
            while (j < hi)
                buffer[k++] = values[j++];
        }
        values.swap(buffer);
    }
    return agreeing;
}

} // namespace

double eta_pairs(const Chronology &truth, const Chronology &predicted) {
    if (truth.size() != predicted.size() || !predicted.is_permutation_of(truth.order()))
        throw Error(Errc::SizeMismatch, "true and predicted orders are not permutations of one vertex set");
    const std::size_t n = truth.size();
    if (n < 2)
        throw Error(Errc::TooSmall, "pairwise agreement needs at least 2 vertices");
    const std::size_t correct = count_ascending_pairs(truth_positions(truth, predicted.order()));
    return static_cast<double>(correct) / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

double bqm(const Chronology &truth, const BinOrdering &bins) {
    if (!bins.partitions(truth.order()))
        throw Error(Errc::NotAPartition, "bins do not partition the vertices of the true chronology");
    const std::size_t delta = bins.delta();
    if (delta < 2)
        throw Error(Errc::DegenerateBins, "binning quality needs at least 2 bins");

    // Sorted truth positions per bin turn each beta(i, j) into a merge count.
    std::vector<std::vector<std::size_t>> positions(delta);
    for (std::size_t b = 0; b < delta; ++b) {
        positions[b] = truth_positions(truth, bins[b]);
        std::sort(positions[b].begin(), positions[b].end());
    }

    double beta_sum = 0.0;
    for (std::size_t i = 0; i < delta; ++i) {
        const auto &pi = positions[i];
        for (std::size_t j = i + 1; j < delta; ++j) {
            const auto &pj = positions[j];
            // For each u in B_i, the members of B_j after it in truth.
            std::size_t ordered = 0;
            std::size_t k = 0;
            for (const std::size_t p : pi) {
                while (k < pj.size() && pj[k] < p)
                    ++k;
                ordered += pj.size() - k;
            }
            beta_sum += static_cast<double>(ordered) / (static_cast<double>(pi.size()) * static_cast<double>(pj.size()));
        }
    }
    const double bin_pairs = static_cast<double>(delta) * static_cast<double>(delta - 1) / 2.0;
    return beta_sum / bin_pairs;
}

std::vector<BucketRow> probability_bucket_table(const WeightedDigraph &dg, const Chronology &truth,
                                                double bucket_width) {
    const double buckets_real = 0.5 / bucket_width;
    const auto buckets = static_cast<std::size_t>(std::llround(buckets_real));
    if (!(bucket_width > 0.0) || buckets < 1 || std::abs(buckets_real - static_cast<double>(buckets)) > 1e-9)
        throw Error(Errc::InvalidConfig, "bucket width must divide 0.5 evenly");
    for (const Vertex v : dg.vertices())
        if (!truth.index_of(v))
            throw Error(Errc::SizeMismatch, "vertex " + std::to_string(v) + " is not in the true chronology");

    std::vector<std::size_t> count(buckets, 0), correct(buckets, 0);
    for (const auto &e : dg.edges()) {
        // 0.6 - 0.5 < 0.1 in binary.
        const double scaled = (e.weight - 0.5) / bucket_width;
        auto b = static_cast<std::ptrdiff_t>(std::ceil(scaled - 1e-9)) - 1;
        b = std::clamp<std::ptrdiff_t>(b, 0, static_cast<std::ptrdiff_t>(buckets) - 1);
        ++count[static_cast<std::size_t>(b)];
        if (*truth.index_of(e.source) < *truth.index_of(e.target))
            ++correct[static_cast<std::size_t>(b)];
    }

    const double total = static_cast<double>(dg.edge_count());
    std::vector<BucketRow> rows;
    for (std::size_t b = 0; b < buckets; ++b) {
        if (count[b] == 0)
            continue;
        BucketRow row;
        row.range_low = 0.5 + static_cast<double>(b) * bucket_width;
        row.range_high = b + 1 == buckets ? 1.0 : 0.5 + static_cast<double>(b + 1) * bucket_width;
        row.edge_count = count[b];
        row.edge_fraction = static_cast<double>(count[b]) / total;
        row.correct_fraction = static_cast<double>(correct[b]) / static_cast<double>(count[b]);
        rows.push_back(row);
    }
    return rows;
}

void write_bucket_csv(std::ostream &out, std::span<const BucketRow> rows) {
    out << "range_low,range_high,edge_fraction,correct_fraction,edge_count\n";
    const auto old_flags = out.flags();
    const auto old_precision = out.precision();
    out << std::setprecision(17);
    for (const auto &r : rows)
        out << r.range_low << ',' << r.range_high << ',' << r.edge_fraction << ',' << r.correct_fraction << ','
            << r.edge_count << '\n';
    out.flags(old_flags);
    out.precision(old_precision);
}

} // namespace netchrono
