#pragma once

// Minimal dense row-major matrix of doubles. Sized for the small factor
// blocks this project works with (rank x rank systems, mode-size x rank
// factors); not a general linear algebra type.

#include <cstddef>
#include <vector>

#include "tenstream/errors.hpp"

namespace tenstream {

class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return v_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return v_[static_cast<std::size_t>(i) * cols_ + j]; }

    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    double* row_ptr(int i) { return v_.data() + static_cast<std::size_t>(i) * cols_; }
    const double* row_ptr(int i) const { return v_.data() + static_cast<std::size_t>(i) * cols_; }

    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }

    void fill(double x) {
        for (auto& e : v_) e = x;
    }

    // Removes one column in place (used when a rank component is pruned).
    void drop_column(int col) {
        if (col < 0 || col >= cols_) throw ArgumentError("drop_column: column out of range");
        std::vector<double> next(static_cast<std::size_t>(rows_) * (cols_ - 1));
        for (int i = 0; i < rows_; ++i) {
            int k = 0;
            for (int j = 0; j < cols_; ++j) {
                if (j == col) continue;
                next[static_cast<std::size_t>(i) * (cols_ - 1) + k] = (*this)(i, j);
                ++k;
            }
        }
        v_ = std::move(next);
        cols_ -= 1;
    }

    // Removes one row and one column in place (covariance pruning).
    void drop_row_col(int idx) {
        if (idx < 0 || idx >= rows_ || rows_ != cols_) throw ArgumentError("drop_row_col: bad index");
        const int n = rows_ - 1;
        std::vector<double> next(static_cast<std::size_t>(n) * n);
        int ii = 0;
        for (int i = 0; i < rows_; ++i) {
            if (i == idx) continue;
            int jj = 0;
            for (int j = 0; j < cols_; ++j) {
                if (j == idx) continue;
                next[static_cast<std::size_t>(ii) * n + jj] = (*this)(i, j);
                ++jj;
            }
            ++ii;
        }
        v_ = std::move(next);
        rows_ = cols_ = n;
    }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> v_;
};

}  // namespace tenstream
