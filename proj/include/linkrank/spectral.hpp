#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "linkrank/config.hpp"
#include "linkrank/sparse.hpp"

namespace linkrank {

/// Per-iteration residuals (1-norm of the difference of successive
/// normalized iterates). Length equals the final iteration count.
struct ConvergenceTrace {
    std::vector<double> residuals;
};

/// Outcome of one power iteration: a 1-normalized nonnegative score vector,
/// the iteration count and residual trace, and whether the tolerance was
/// reached before max_iterations.
struct RankResult {
    std::vector<double> scores;
    int iterations = 0;
    ConvergenceTrace trace;
    bool converged = false;
};

/// Computes y = x * Op for a row vector x; x and y have equal length and
/// never alias.
using LinearOperator = std::function<void(std::span<const double>, std::span<double>)>;

/// A row-stochastic matrix kept in sparse form. Rows of the source matrix
/// with positive sum are divided by that sum; zero rows are not stored and
/// act as the uniform row (1/N each) during application.
class RowStochastic {
public:
    int size() const { return scaled_.rows(); }
    const SparseMatrix& scaled() const { return scaled_; }
    const std::vector<std::uint8_t>& uniform_rows() const { return uniform_rows_; }

    void apply(std::span<const double> x, std::span<double> y) const;
    std::vector<std::vector<double>> to_dense() const;

private:
    friend RowStochastic stochasticize(const SparseMatrix&);
    SparseMatrix scaled_;
    std::vector<std::uint8_t> uniform_rows_;
};

/// Stochasticity adjustment: rejects negative entries, normalizes nonzero
/// rows, replaces zero rows by the uniform row.
RowStochastic stochasticize(const SparseMatrix& matrix);

/// zeta * M + (1-zeta)/N * ones. Never materialized densely: applied as the
/// sparse part plus two rank-one corrections (zero-row mass and uniform
/// smoothing), so entrywise positivity costs nothing at scale.
class SmoothedOperator {
public:
    SmoothedOperator(RowStochastic base, double zeta);

    int size() const { return base_.size(); }
    double smoothing() const { return zeta_; }

    void apply(std::span<const double> x, std::span<double> y) const;
    LinearOperator as_operator() const;
    std::vector<std::vector<double>> to_dense() const;

private:
    RowStochastic base_;
    double zeta_;
};

/// Irreducibility/aperiodicity adjustment; zeta must lie strictly in (0,1).
SmoothedOperator smooth(RowStochastic base, double zeta);

std::vector<double> uniform_vector(int n);

/// Power iteration on row vectors: x <- normalize(x * Op) until the 1-norm
/// residual between successive normalized iterates drops to `tolerance` or
/// `max_iterations` is exhausted (converged=false). With
/// normalize_each_step=false the raw iterate is carried instead, but
/// residuals are still measured between normalized copies and the returned
/// scores are normalized. Throws if the start vector is not a probability
/// vector or if a non-finite value appears mid-iteration.
RankResult power_iterate(const LinearOperator& op, std::vector<double> start,
                         double tolerance, int max_iterations,
                         bool normalize_each_step = true);

/// Convenience wrapper: uniform start, settings from cfg.
RankResult power_iterate(const SmoothedOperator& op, const RunConfig& cfg);

} // namespace linkrank
