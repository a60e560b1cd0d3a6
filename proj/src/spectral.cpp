#include "linkrank/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace linkrank {

void RowStochastic::apply(std::span<const double> x, std::span<double> y) const {
    scaled_.apply_left(x, y);
    const int n = size();
    double dangling_mass = 0.0;
    for (int i = 0; i < n; ++i)
        if (uniform_rows_[i])
            dangling_mass += x[i];
    if (dangling_mass != 0.0) {
        const double share = dangling_mass / n;
        for (int j = 0; j < n; ++j)
            y[j] += share;
    }
}

std::vector<std::vector<double>> RowStochastic::to_dense() const {
    auto d = scaled_.to_dense();
    const int n = size();
    for (int i = 0; i < n; ++i)
        if (uniform_rows_[i])
            std::fill(d[i].begin(), d[i].end(), 1.0 / n);
    return d;
}

RowStochastic stochasticize(const SparseMatrix& matrix) {
    if (matrix.rows() != matrix.cols())
        throw std::invalid_argument("stochasticize: matrix must be square");
    matrix.for_each([](int i, int j, double v) {
        if (v < 0.0)
            throw std::invalid_argument("stochasticize: negative entry at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
    });
    const auto sums = matrix.row_sums();
    const int n = matrix.rows();
    std::vector<double> inv(n, 0.0);
    RowStochastic out;
    out.uniform_rows_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        if (sums[i] > 0.0)
            inv[i] = 1.0 / sums[i];
        else
            out.uniform_rows_[i] = 1;
    }
    out.scaled_ = matrix.scaled_rows(inv);
    return out;
}

SmoothedOperator::SmoothedOperator(RowStochastic base, double zeta)
    : base_(std::move(base)), zeta_(zeta) {
    if (!(zeta > 0.0) || !(zeta < 1.0))
        throw std::invalid_argument("smoothing weight must lie strictly in (0,1), got " +
                                    std::to_string(zeta));
}

void SmoothedOperator::apply(std::span<const double> x, std::span<double> y) const {
    base_.apply(x, y);
    const int n = size();
    double total = 0.0;
    for (int i = 0; i < n; ++i)
        total += x[i];
    const double uniform_share = (1.0 - zeta_) * total / n;
    for (int j = 0; j < n; ++j)
        y[j] = zeta_ * y[j] + uniform_share;
}

LinearOperator SmoothedOperator::as_operator() const {
    return [op = *this](std::span<const double> x, std::span<double> y) { op.apply(x, y); };
}

std::vector<std::vector<double>> SmoothedOperator::to_dense() const {
    auto d = base_.to_dense();
    const int n = size();
    const double uniform = (1.0 - zeta_) / n;
    for (auto& row : d)
        for (auto& v : row)
            v = zeta_ * v + uniform;
    return d;
}

SmoothedOperator smooth(RowStochastic base, double zeta) {
    return SmoothedOperator(std::move(base), zeta);
}

std::vector<double> uniform_vector(int n) {
    if (n <= 0)
        throw std::invalid_argument("uniform_vector: size must be positive");
    return std::vector<double>(n, 1.0 / n);
}

namespace {

double one_norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v)
        s += std::abs(x);
    return s;
}

} // namespace

RankResult power_iterate(const LinearOperator& op, std::vector<double> start,
                         double tolerance, int max_iterations, bool normalize_each_step) {
    const int n = static_cast<int>(start.size());
    if (n == 0)
        throw std::invalid_argument("power_iterate: empty start vector");
    if (!(tolerance > 0.0))
        throw std::invalid_argument("power_iterate: tolerance must be positive");
    if (max_iterations <= 0)
        throw std::invalid_argument("power_iterate: max_iterations must be positive");
    double start_sum = 0.0;
    for (double v : start) {
        if (!(v >= 0.0))
            throw std::invalid_argument("power_iterate: start vector must be nonnegative");
        start_sum += v;
    }
    if (std::abs(start_sum - 1.0) > 1e-9)
        throw std::invalid_argument("power_iterate: start vector must sum to 1");

    RankResult result;
    std::vector<double> current = std::move(start);
    std::vector<double> previous_normalized = current;
    std::vector<double> next(n);
    std::vector<double> normalized(n);

    for (int k = 1; k <= max_iterations; ++k) {
        op(current, next);
        double norm = 0.0;
        for (double v : next) {
            if (!std::isfinite(v))
                throw std::runtime_error("power_iterate: non-finite value at iteration " +
                                         std::to_string(k));
            norm += std::abs(v);
        }
        if (norm == 0.0)
            throw std::runtime_error("power_iterate: operator annihilated the iterate at iteration " +
                                     std::to_string(k));
        for (int i = 0; i < n; ++i)
            normalized[i] = next[i] / norm;

        double residual = 0.0;
        for (int i = 0; i < n; ++i)
            residual += std::abs(normalized[i] - previous_normalized[i]);
        result.trace.residuals.push_back(residual);
        result.iterations = k;

        previous_normalized = normalized;
        current = normalize_each_step ? normalized : next;
        if (residual <= tolerance) {
            result.converged = true;
            break;
        }
    }

    result.scores = std::move(previous_normalized);
    const double total = one_norm(result.scores);
    for (auto& v : result.scores)
        v /= total;
    return result;
}

RankResult power_iterate(const SmoothedOperator& op, const RunConfig& cfg) {
    return power_iterate(op.as_operator(), uniform_vector(op.size()), cfg.tolerance,
                         cfg.max_iterations);
}

} // namespace linkrank
