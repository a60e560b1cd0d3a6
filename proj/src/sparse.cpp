#include "linkrank/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace linkrank {

SparseMatrix::SparseMatrix(int rows, int cols, std::vector<Triplet> triplets)
    : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("SparseMatrix: negative dimension");
    for (const auto& t : triplets) {
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw std::invalid_argument("SparseMatrix: triplet out of range");
    }
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    row_ptr_.assign(rows_ + 1, 0);
    col_idx_.reserve(triplets.size());
    values_.reserve(triplets.size());
    std::size_t i = 0;
    while (i < triplets.size()) {
        const int r = triplets[i].row;
        const int c = triplets[i].col;
        double v = 0.0;
        while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c)
            v += triplets[i++].value;
        if (v != 0.0) {
            col_idx_.push_back(c);
            values_.push_back(v);
            ++row_ptr_[r + 1];
        }
    }
    for (int r = 0; r < rows_; ++r)
        row_ptr_[r + 1] += row_ptr_[r];
}

void SparseMatrix::apply_left(std::span<const double> x, std::span<double> y) const {
    assert(static_cast<int>(x.size()) == rows_);
    assert(static_cast<int>(y.size()) == cols_);
    std::fill(y.begin(), y.end(), 0.0);
    for (int i = 0; i < rows_; ++i) {
        const double xi = x[i];
        if (xi == 0.0)
            continue;
        for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
            y[col_idx_[k]] += xi * values_[k];
    }
}

std::vector<double> SparseMatrix::row_sums() const {
    std::vector<double> s(rows_, 0.0);
    for_each([&](int i, int, double v) { s[i] += v; });
    return s;
}

std::vector<double> SparseMatrix::col_sums() const {
    std::vector<double> s(cols_, 0.0);
    for_each([&](int, int j, double v) { s[j] += v; });
    return s;
}

std::vector<double> SparseMatrix::row_counts() const {
    std::vector<double> s(rows_, 0.0);
    for_each([&](int i, int, double) { s[i] += 1.0; });
    return s;
}

std::vector<double> SparseMatrix::col_counts() const {
    std::vector<double> s(cols_, 0.0);
    for_each([&](int, int j, double) { s[j] += 1.0; });
    return s;
}

SparseMatrix SparseMatrix::transposed() const {
    std::vector<Triplet> t;
    t.reserve(values_.size());
    for_each([&](int i, int j, double v) { t.push_back({j, i, v}); });
    return SparseMatrix(cols_, rows_, std::move(t));
}

SparseMatrix SparseMatrix::without_diagonal() const {
    std::vector<Triplet> t;
    t.reserve(values_.size());
    for_each([&](int i, int j, double v) {
        if (i != j)
            t.push_back({i, j, v});
    });
    return SparseMatrix(rows_, cols_, std::move(t));
}

SparseMatrix SparseMatrix::scaled_rows(std::span<const double> factors) const {
    assert(static_cast<int>(factors.size()) == rows_);
    std::vector<Triplet> t;
    t.reserve(values_.size());
    for_each([&](int i, int j, double v) { t.push_back({i, j, v * factors[i]}); });
    return SparseMatrix(rows_, cols_, std::move(t));
}

SparseMatrix SparseMatrix::weighted_sum(const SparseMatrix& a, const SparseMatrix& b,
                                        double wa, double wb) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("SparseMatrix::weighted_sum: dimension mismatch");
    std::vector<Triplet> t;
    t.reserve(a.nonzeros() + b.nonzeros());
    a.for_each([&](int i, int j, double v) { t.push_back({i, j, wa * v}); });
    b.for_each([&](int i, int j, double v) { t.push_back({i, j, wb * v}); });
    return SparseMatrix(a.rows(), a.cols(), std::move(t));
}

double SparseMatrix::entry(int row, int col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw std::out_of_range("SparseMatrix::entry");
    for (int k = row_ptr_[row]; k < row_ptr_[row + 1]; ++k)
        if (col_idx_[k] == col)
            return values_[k];
    return 0.0;
}

std::vector<std::vector<double>> SparseMatrix::to_dense() const {
    std::vector<std::vector<double>> d(rows_, std::vector<double>(cols_, 0.0));
    for_each([&](int i, int j, double v) { d[i][j] = v; });
    return d;
}

} // namespace linkrank
