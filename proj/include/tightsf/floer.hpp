#pragma once

// Linear-algebra model of the contact classes c(xi^n_{i,j}) on
// M_n = M(-2; 1/2, 2/3, (5n+1)/(6n+1)).
//
// The Stein fillable classes c(xi^n_{0,j'}), j' = -n+1, -n+3, ..., n-1, form a
// basis; every other class is an integer combination of them. Classes are
// only defined up to sign.

#include "tightsf/arith.hpp"

#include <map>
#include <string>
#include <vector>

namespace tightsf {

struct ContactIndex {
    long n;
    long i;
    long j;

    bool valid() const;
    std::string str() const;
    friend bool operator==(const ContactIndex&, const ContactIndex&) = default;
};

/// All (i, j) with 0 <= i <= n-1, |j| <= n-i-1, j = n+1-i (mod 2).
std::vector<ContactIndex> index_set(long n);

/// Integer vector on the grid j' in {-n+1, -n+3, ..., n-1}.
class ExpansionVector {
public:
    explicit ExpansionVector(long n);

    long n() const { return n_; }
    /// Grid points in increasing order.
    std::vector<long> grid() const;
    bool on_grid(long jp) const;
    const Int& at(long jp) const;
    Int& at(long jp);
    const std::vector<Int>& coefficients() const { return coeffs_; }
    bool is_zero() const;

    ExpansionVector operator-() const;
    friend bool operator==(const ExpansionVector&, const ExpansionVector&) = default;
    friend bool operator<(const ExpansionVector& a, const ExpansionVector& b)
    {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.coeffs_ < b.coeffs_;
    }

private:
    long n_;
    std::vector<Int> coeffs_;  // index (j' + n - 1) / 2
};

/// Polynomial in t^{1/2}, t^{-1/2}; keys are doubled exponents.
class HalfLaurent {
public:
    HalfLaurent() = default;
    static HalfLaurent monomial(long doubled_exponent, Int coefficient = 1);
    static HalfLaurent from_terms(std::map<long, Int> terms);

    const std::map<long, Int>& terms() const { return terms_; }
    /// Coefficient of t^{doubled/2}.
    Int coefficient(long doubled_exponent) const;

    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
    friend bool operator==(const HalfLaurent&, const HalfLaurent&) = default;

    std::string str() const;

private:
    std::map<long, Int> terms_;  // no zero coefficients
};

/// c(xi^n_{i,j}) = sum_k (-1)^k C(i,k) c(xi^n_{0, j-i+2k}).
ExpansionVector expansion(const ContactIndex& idx);

/// t^{j/2} (t^{1/2} - t^{-1/2})^i, multiplied out term by term. Its coefficients
/// are (-1)^i times those of expansion(idx); classes are only defined up to sign.
HalfLaurent laurent_image(const ContactIndex& idx);

/// j' -> -j'.
ExpansionVector conjugate(const ExpansionVector& v);

/// True iff the structure xi^n_{i,j} cannot be Stein fillable by the mod 2
/// argument: j = 0, i > 0, the class is conjugation invariant up to sign, and
/// the central coefficient is even.
bool stein_obstructed(const ContactIndex& idx);

bool pairwise_distinct(long n);

/// All classes on M_n share theta = 2, hence degree -theta/4 - 1/2 = -1.
inline constexpr long kThetaMn = 2;
inline constexpr long kContactClassDegree = -1;

}  // namespace tightsf
