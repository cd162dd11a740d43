#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <netchrono/graph.hpp>

namespace netchrono {

enum class CentralityKind { Degree, Betweenness, Eigenvector };

/// Which measure produced a ScoreTable; Dcm marks differential core scores.
enum class MeasureTag { Degree, Betweenness, Eigenvector, Dcm };

std::string_view name_of(CentralityKind kind) noexcept;
std::string_view name_of(MeasureTag tag) noexcept;
std::optional<CentralityKind> parse_centrality_kind(std::string_view name) noexcept;

/**
 * Per-vertex real scores. Vertices are stored in ascending label order (the
 * order of the source graph) with a parallel value array.
 */
class ScoreTable {
public:
    ScoreTable() = default;
    /// Throws Errc::SizeMismatch on length mismatch, Errc::InvalidConfig on a
    /// non-finite score.
    ScoreTable(std::vector<Vertex> vertices, std::vector<double> scores, MeasureTag tag,
               std::optional<double> dominant_eigenvalue = std::nullopt);

    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    std::span<const double> scores() const noexcept { return scores_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    MeasureTag tag() const noexcept { return tag_; }
    std::optional<double> dominant_eigenvalue() const noexcept { return eigenvalue_; }

    /// Score of `v`; throws Errc::UnknownVertex if absent.
    double score(Vertex v) const;

    /// Copy with every score multiplied by `factor`.
    ScoreTable scaled(double factor) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<double> scores_;
    MeasureTag tag_ = MeasureTag::Degree;
    std::optional<double> eigenvalue_;
};

inline constexpr double kDefaultEigenTolerance = 1e-10;
inline constexpr std::size_t kDefaultEigenMaxIterations = 10000;

/// deg(v) / (|V| - 1); 0 on a single-vertex graph.
ScoreTable degree_centrality(const UndirectedGraph &g);

/// Unnormalized betweenness over unordered endpoint pairs (Brandes).
ScoreTable betweenness_centrality(const UndirectedGraph &g);

/**
 * Dominant adjacency eigenvector, non-negative and of unit Euclidean length,
 * by power iteration from the uniform vector. The iteration runs on A + I,
 * which shares A's eigenvectors but keeps bipartite graphs (stars, even
 * cycles) from oscillating. The reported eigenvalue is the Rayleigh quotient
 * x^T A x. Edgeless graphs return all zeros with eigenvalue 0.
 *
 * Throws Errc::NoConvergence if successive iterates still differ by more than
 * `tolerance` (infinity norm) after `max_iterations`.
 */
ScoreTable eigenvector_centrality(const UndirectedGraph &g, double tolerance = kDefaultEigenTolerance,
                                  std::size_t max_iterations = kDefaultEigenMaxIterations);

/// Dispatch with default settings.
ScoreTable compute(const UndirectedGraph &g, CentralityKind kind);

} // namespace netchrono
