#pragma once

// Negative continued fractions [a0, a1, ..., am] = a0 - 1/(a1 - 1/(... - 1/am))
// and the counting formulas built on them.

#include "tightsf/arith.hpp"
#include "tightsf/slope.hpp"

#include <string>
#include <vector>

namespace tightsf {

struct NegContFrac {
    std::vector<Int> entries;
    /// Set by reverse_shift: the last entry may be -1 and the sequence is not
    /// the canonical expansion of its value.
    bool derived = false;

    bool is_canonical() const;
    std::string str() const;

    friend bool operator==(const NegContFrac&, const NegContFrac&) = default;
};

/// -q/p = [a0..am] and -v/u = [a0..a(m-1)], with p*v - q*u = 1.
struct Convergents {
    Int p, q, u, v;
};

/// Canonical expansion (all entries <= -2) of a rational x < -1.
NegContFrac expand(const Slope& x);

/// Right-to-left evaluation; the empty sequence is inf. Throws DomainError if
/// a non-canonical sequence hits a zero intermediate denominator.
Slope evaluate(const NegContFrac& cf);

Convergents convergents(const Slope& x);

/// [am, ..., a1, a0 + 1]; evaluates to (p - q)/(v - u).
NegContFrac reverse_shift(const NegContFrac& cf);

/// T(r) = |prod (a_k + 1)| over the expansion of -1/r, r in (0, 1).
Int t_count(const Rational& r);

/// Number of tight structures on a solid torus with boundary slope s <= -1:
/// |(b0+1)...(b(m-1)+1) * bm| for s = [b0..bm], and 1 for s = -1.
Int honda_count(const Slope& s);

}  // namespace tightsf
