#pragma once

// Small dense exact matrices.

#include "tightsf/arith.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tightsf {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix square(std::size_t n) { return Matrix(n, n); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const
    {
        if (!is_square())
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
/// Block diagonal sum.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& m);

/// (#positive - #negative) of the diagonal after symmetric congruence
/// reduction over Q. Requires a symmetric matrix.
long signature(const IntMatrix& m);

/// Some rational solution of m x = rhs, or nullopt if the system is inconsistent.
std::optional<std::vector<Rational>> solve(const IntMatrix& m, const std::vector<Int>& rhs);

std::string to_string(const IntMatrix& m);

}  // namespace tightsf
