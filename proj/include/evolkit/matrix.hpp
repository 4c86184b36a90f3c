#ifndef EVOLKIT_MATRIX_HPP
#define EVOLKIT_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "evolkit/rational.hpp"

namespace evolkit {

using Vector = std::vector<GaussianRational>;

/// Dense rectangular matrix over the Gaussian rationals.
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    GaussianRational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    DenseMatrix operator*(const DenseMatrix& o) const;
    DenseMatrix operator+(const DenseMatrix& o) const;
    DenseMatrix operator-(const DenseMatrix& o) const;

    Vector apply(std::span<const GaussianRational> v) const;

    GaussianRational trace() const;

    /// Principal submatrix on the given (0-based) index list, in order.
    DenseMatrix principal_submatrix(std::span<const int> indices) const;

    bool is_zero() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<GaussianRational> data_;
};

} // namespace evolkit

#endif
