#include "tightsf/linalg.hpp"

#include <utility>

namespace tightsf {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw DomainError("matrix shapes do not match");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

IntMatrix transpose(const IntMatrix& a)
{
    IntMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(j, i) = a(i, j);
    return out;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

Int determinant(const IntMatrix& input)
{
    if (!input.is_square())
        throw DomainError("determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0)
        return 1;
    IntMatrix m = input;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // exact division by the previous pivot
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

long signature(const IntMatrix& input)
{
    if (!input.is_symmetric())
        throw DomainError("signature needs a symmetric matrix");
    const std::size_t n = input.rows();
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = input(i, j);

    // Swap index i and j as a congruence (rows and columns together).
    auto swap_index = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t c = 0; c < n; ++c)
            std::swap(a(i, c), a(j, c));
        for (std::size_t r = 0; r < n; ++r)
            std::swap(a(r, i), a(r, j));
    };
    // Row/column i += row/column j.
    auto add_index = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c)
            a(i, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r)
            a(r, i) += a(r, j);
    };

    long positive = 0;
    long negative = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, pivot) == 0)
            ++pivot;
        if (pivot == n) {
            // All remaining diagonal entries vanish. An off-diagonal a(i,j) != 0
            // gives a(i,i) + 2a(i,j) + a(j,j) = 2a(i,j) after i += j.
            bool found = false;
            for (std::size_t i = k; i < n && !found; ++i)
                for (std::size_t j = i + 1; j < n && !found; ++j)
                    if (a(i, j) != 0) {
                        add_index(i, j);
                        pivot = i;
                        found = true;
                    }
            if (!found)
                break;  // remaining block is zero
        }
        swap_index(k, pivot);
        const Rational d = a(k, k);
        if (d > 0)
            ++positive;
        else
            ++negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0)
                continue;
            Rational f = a(i, k) / d;
            for (std::size_t j = k; j < n; ++j)
                a(i, j) -= f * a(k, j);
            for (std::size_t r = k; r < n; ++r)
                a(r, i) -= f * a(r, k);
        }
    }
    return positive - negative;
}

std::optional<std::vector<Rational>> solve(const IntMatrix& m, const std::vector<Int>& rhs)
{
    if (rhs.size() != m.rows())
        throw DomainError("right-hand side has the wrong length");
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    RatMatrix aug(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            aug(i, j) = m(i, j);
        aug(i, cols) = rhs[i];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && aug(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        for (std::size_t j = 0; j <= cols; ++j)
            std::swap(aug(r, j), aug(p, j));
        Rational lead = aug(r, c);
        for (std::size_t j = c; j <= cols; ++j)
            aug(r, j) /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || aug(i, c) == 0)
                continue;
            Rational f = aug(i, c);
            for (std::size_t j = c; j <= cols; ++j)
                aug(i, j) -= f * aug(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (aug(i, cols) != 0)
            return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        x[pivot_cols[i]] = aug(i, cols);
    return x;
}

std::string to_string(const IntMatrix& m)
{
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                out += ",";
            out += m(i, j).get_str();
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace tightsf
