#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace linkrank {

/// Row-major compressed sparse matrix of doubles.
///
/// Built from coordinate triplets; duplicate coordinates accumulate by
/// summation and exact zeros are dropped after accumulation. Rows are the
/// natural unit: ranking operators act on row vectors (y = x * A).
class SparseMatrix {
public:
    struct Triplet {
        int row = 0;
        int col = 0;
        double value = 0.0;
    };

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols, std::vector<Triplet> triplets);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nonzeros() const { return values_.size(); }

    /// y = x * A for a row vector x (length rows()); y must have length cols().
    void apply_left(std::span<const double> x, std::span<double> y) const;

    std::vector<double> row_sums() const;
    std::vector<double> col_sums() const;
    /// Number of stored entries per row / column.
    std::vector<double> row_counts() const;
    std::vector<double> col_counts() const;

    SparseMatrix transposed() const;
    SparseMatrix without_diagonal() const;
    /// Row i multiplied by factors[i].
    SparseMatrix scaled_rows(std::span<const double> factors) const;

    /// wa*A + wb*B entrywise.
    static SparseMatrix weighted_sum(const SparseMatrix& a, const SparseMatrix& b,
                                     double wa = 1.0, double wb = 1.0);

    double entry(int row, int col) const;
    std::vector<std::vector<double>> to_dense() const;

    template <typename F>
    void for_each(F&& f) const {
        for (int i = 0; i < rows_; ++i)
            for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
                f(i, col_idx_[k], values_[k]);
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> row_ptr_{0};
    std::vector<int> col_idx_;
    std::vector<double> values_;
};

} // namespace linkrank
