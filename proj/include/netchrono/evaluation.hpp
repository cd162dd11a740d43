#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include <netchrono/baselines.hpp>
#include <netchrono/graph.hpp>

namespace netchrono {

/// Fraction of unordered vertex pairs whose relative order in `predicted`
/// matches `truth`. Throws Errc::SizeMismatch unless both are permutations of
/// the same set, Errc::TooSmall for fewer than 2 vertices.
double eta_pairs(const Chronology &truth, const Chronology &predicted);

/**
 * Binning quality measure: for every bin pair i < j, the fraction of
 * (u in B_i, v in B_j) with u truly earlier than v, averaged with equal weight
 * over all C(delta, 2) bin pairs.
 *
 * Throws Errc::NotAPartition unless the bins cover exactly truth's vertices,
 * Errc::DegenerateBins for fewer than 2 bins.
 */
double bqm(const Chronology &truth, const BinOrdering &bins);

/// One probability bucket (low, high] of a pairwise digraph.
struct BucketRow {
    double range_low = 0.5;
    double range_high = 1.0;
    double edge_fraction = 0.0;    ///< share of all edges falling in the bucket
    double correct_fraction = 0.0; ///< share of those edges agreeing with truth
    std::size_t edge_count = 0;
};

/// Buckets of width `bucket_width` over (0.5, 1.0]; weight 0.5 counts into the
/// lowest bucket. Only nonempty buckets are returned, in ascending order.
/// Throws Errc::InvalidConfig if the width does not divide 0.5, and
/// Errc::SizeMismatch if truth lacks one of dg's vertices.
std::vector<BucketRow> probability_bucket_table(const WeightedDigraph &dg, const Chronology &truth,
                                                double bucket_width = 0.1);

/// CSV with header range_low,range_high,edge_fraction,correct_fraction,edge_count.
void write_bucket_csv(std::ostream &out, std::span<const BucketRow> rows);

} // namespace netchrono
