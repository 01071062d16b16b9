#pragma once

// Slope bookkeeping for thickening the singular fibre neighbourhoods V_i:
// measured slopes, the edge-rounding correction, the closed form for the
// slope on dV_3 after cutting along a vertical annulus, and its behaviour as
// the twisting n1 -> -inf.

#include "tightsf/arith.hpp"
#include "tightsf/seifert.hpp"
#include "tightsf/slope.hpp"

#include <optional>
#include <vector>

namespace tightsf {

struct SlopeCoeffs {
    Rational A, C, F, D;
};

/// Slope of a standard neighbourhood of twisting n < 0, read on -d(M \ V_i).
Slope measured_slope(int i, const SeifertData& sd, const Int& n);

/// sA + sB - 1/delta for a balanced vertical annulus; both slopes must have
/// denominators dividing |delta|.
Slope rounded_slope(const Slope& sA, const Slope& sB, const Int& delta);

/// Slope on -d(M \ V_3) read in dV_3 coordinates: A_3^{-1} applied to the
/// vector (-beta, alpha) of alpha/beta.
Slope to_v3_coordinates(const SeifertData& sd, const Slope& outer);

SlopeCoeffs slope_coeffs(const SeifertData& sd);

/// (A n1 + F) q3 / ((C n1 + D) v3); inf when only the denominator vanishes.
Slope s_n1(const SlopeCoeffs& coeffs, const SeifertData& sd, const Int& n1);

/// Step-by-step route: pick n2 with q1 n1 + v1 = q2 n2 + v2 (if one exists with
/// n2 < 0), round the annulus and transfer to dV_3.
struct SteppedSlope {
    Int n2;
    Slope rounded;   // on -d(M \ V_3)
    Slope on_v3;
};
std::optional<SteppedSlope> s_n1_stepwise(const SeifertData& sd, const Int& n1);

inline constexpr long kLimitWindow = 100;

struct LimitAnalysis {
    Slope limit;          // A q3 / (C v3)
    bool increasing;      // strictly, in cyclic order, as n1 runs -1, -2, ..., -100
    bool constant;        // A D == C F
    bool threshold_ok;    // limit <= (p3 - q3)/(v3 - u3)
    bool threshold_rule;  // p1/q1 + p2/q2 <= 1  or  (A > 0 and C < 0)
    Slope threshold;      // (p3 - q3)/(v3 - u3)
};

/// Throws DomainError in the gap 0 <= A < 1/4.
LimitAnalysis limit_analysis(const SlopeCoeffs& coeffs, const SeifertData& sd);

/// True if the slopes (in the given order) move strictly counterclockwise
/// around Q u {inf} and wrap past inf at most once in total.
bool cyclically_increasing(const std::vector<Slope>& seq);

struct UpperBoundTerm {
    long k;
    Int twisting;        // maximal twisting -(6k+1)
    Slope rounded;       // -k/(6k+1)
    Slope boundary;      // on dV_3, -n+k
    Int count;           // n-k
};

struct UpperBound {
    std::vector<UpperBoundTerm> per_k;
    Int total;
};

/// The manifold M(-2; 1/2, 2/3, (5n+1)/(6n+1)) for n >= 1.
SeifertData mn_manifold(long n);

UpperBound mn_upper_bound(long n);

/// Twisting step test: 1/ruling >= n + 1.
bool twist_step_allowed(const Int& n, const Slope& ruling);

/// Imbalance used when thickening V_1 against a fibre of twisting -q1 q2
/// (q1 != q2) or -q (q1 == q2): |q1 n1 + v1| exceeds the other side for every
/// n1 below the threshold. Checked over a window of `span` values.
struct ImbalanceCheck {
    bool equal_denominators;  // q1 == q2
    Int bound;                // q  or  q1 q2
    Int below;                // the inequality is checked for n1 < -below
    bool holds;
};
ImbalanceCheck imbalance_check(const SeifertData& sd, long span = 50);

}  // namespace tightsf
