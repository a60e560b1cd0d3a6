#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "linkrank/config.hpp"
#include "linkrank/graph.hpp"

namespace linkrank {

/// ranks[i] is the 1-based rank position of vertex i (1 = largest score).
/// Ties break by ascending vertex index, so orderings are deterministic.
struct Ordering {
    std::vector<int> ranks;
};

Ordering ordering_of(std::span<const double> scores);

/// x.y / (|x| |y|); rejects dimension mismatches and zero vectors.
double cosine(std::span<const double> x, std::span<const double> y);

/// Rank-order correlation 1 - 6*sum(d^2)/(N(N^2-1)) over the induced
/// orderings, the formula as printed (no fractional-rank tie correction).
double spearman(std::span<const double> x, std::span<const double> y);

/// Standard importance measure: total traded volume (weighted in-degree
/// plus out-degree) normalized to sum 1.
std::vector<double> total_volume(const Network& net);

/// One benchmark table cell: iteration count plus whether the run reached
/// the tolerance.
struct IterationCell {
    int iterations = 0;
    bool converged = false;
};

struct BenchmarkRow {
    std::string name;
    int vertices = 0;
    long edges = 0;
    IterationCell hits_iterations;        ///< authority chain
    IterationCell pagerank_iterations;
    IterationCell hits_accel_iterations;  ///< authority chain
    IterationCell traderank_iterations;
    double cos_theta = 0.0;               ///< trade ranking vs total volume
    double rank_correlation = 0.0;
};

/// Per-dataset rows plus a synthesized average row (column means;
/// iteration means cover converged cells only).
struct BenchmarkReport {
    std::vector<BenchmarkRow> rows;
    void write_csv(std::ostream& out, int significant_digits = 6) const;
};

/// Runs the four ranking algorithms on every dataset at the same tolerance
/// and records iteration counts plus the similarity of the trade ranking
/// to the total-volume measure. Non-convergence is recorded per cell.
BenchmarkReport benchmark(const std::vector<std::pair<std::string, Network>>& datasets,
                          const RunConfig& cfg);

} // namespace linkrank
