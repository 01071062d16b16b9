#pragma once

// Slopes on a torus as points of the rational projective line Q u {inf}.
//
// A slope p/q is the line spanned by the column vector (q, p); a 2x2 integer
// matrix acts on column vectors and the image is read back as y/x. Lines are
// unoriented, so (x, y) and (-x, -y) give the same slope.

#include "tightsf/arith.hpp"

#include <string>
#include <string_view>
#include <utility>

namespace tightsf {

class Slope {
public:
    /// The slope 0.
    Slope() : num_(0), den_(1) {}
    Slope(const Int& num, const Int& den);
    explicit Slope(const Rational& value);
    Slope(long value) : num_(value), den_(1) {}

    static Slope infinity() { return Slope(Int(1), Int(0)); }
    /// Slope of the line through (x, y), i.e. y/x. (0, 0) is rejected.
    static Slope from_vector(const Int& x, const Int& y);
    /// Accepts "p/q", "p", "inf" / "infinity".
    static Slope parse(std::string_view text);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_infinite() const { return den_ == 0; }
    /// Throws DomainError for inf.
    Rational value() const;

    /// Canonical text: "inf", "p" for integers, otherwise "p/q".
    std::string str() const;

    friend bool operator==(const Slope& a, const Slope& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    Int num_;
    Int den_;  // >= 0; den == 0 only for inf, then num == 1
};

/// (den, num); inf gives (0, 1).
std::pair<Int, Int> slope_vec(const Slope& s);

/// Usual order on Q, with inf placed above every rational. Used to define the
/// cyclic (counterclockwise) order on the boundary circle.
bool linear_less(const Slope& a, const Slope& b);

/// Integer 2x2 matrix with determinant +1 or -1.
class UniMat {
public:
    UniMat() : a_(1), b_(0), c_(0), d_(1) {}
    UniMat(Int a, Int b, Int c, Int d);

    static UniMat identity() { return UniMat(); }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }
    Int det() const { return a_ * d_ - b_ * c_; }

    UniMat inverse() const;
    std::pair<Int, Int> apply(const Int& x, const Int& y) const
    {
        return {a_ * x + b_ * y, c_ * x + d_ * y};
    }

    friend UniMat operator*(const UniMat& l, const UniMat& r);
    friend bool operator==(const UniMat& l, const UniMat& r) = default;

    std::string str() const;

private:
    Int a_, b_, c_, d_;
};

Slope apply_mat(const UniMat& m, const Slope& s);

}  // namespace tightsf
