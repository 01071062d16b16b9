#pragma once

// Small Seifert fibered spaces M(e0; r1, r2, r3) over S^2.

#include "tightsf/arith.hpp"
#include "tightsf/contfrac.hpp"
#include "tightsf/linalg.hpp"
#include "tightsf/slope.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace tightsf {

struct SeifertData {
    Int e0;
    std::array<Rational, 3> r;     // in (0,1), ascending
    std::array<Convergents, 3> conv;
    /// A_i = [[q_i, v_i], [-p_i, -u_i]], gluing dV_i to the boundary of the
    /// pair-of-pants product.
    std::array<UniMat, 3> attaching;

    Rational invariant_sum() const { return r[0] + r[1] + r[2]; }
    /// Matrix whose image measures slopes on -d(M \ V_i) for the presentation
    /// M(p1/q1, -(q2-p2)/q2, -(q3-p3)/q3): A_1 as above and
    /// [[q_i, v_i], [q_i - p_i, v_i - u_i]] for i = 2, 3. i is 1-based.
    UniMat measuring_matrix(int i) const;

    friend bool operator==(const SeifertData& a, const SeifertData& b)
    {
        return a.e0 == b.e0 && a.r == b.r;
    }
};

/// Fold integer parts into e0 and sort. Throws DomainError on an integral invariant.
SeifertData normalize(const std::array<Rational, 3>& raw, const Int& e0_raw);

/// "e0;r1,r2,r3" (normalized presentation, also accepted unnormalized) or
/// "r1,r2,r3" (unnormalized, e0 = 0). Optional "M(...)" wrapper.
SeifertData parse_seifert(std::string_view text);

std::string to_string(const SeifertData& sd);

/// |q1 q2 q3 (e0 + r1 + r2 + r3)|; 0 exactly in the surface-bundle case.
Int h1_order(const SeifertData& sd);

/// Star-shaped plumbing: centre framed e0, legs [a^i_0, ..., a^i_{n_i}] from
/// the expansion of -1/r_i, leg roots joined to the centre. Vertex order is
/// centre, then leg 1 root to tip, leg 2, leg 3.
IntMatrix linking_matrix(const SeifertData& sd);

enum class FamilyKind {
    wrong_e0,
    torus_bundle,
    thm2_family,      // (1/2, 2/3, (5n+1)/(6n+1))
    thm1_case3,       // (1/2, 2/3, k/(k+1)), k >= 6
    sum_ge_9_4,
    sum_lt_2,
    degenerate_sum_2,
    gap_other,
};

struct FamilyTag {
    FamilyKind kind;
    long parameter = 0;  // n for thm2_family, k for thm1_case3, 1..3 for torus_bundle

    std::string str() const;
    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// All matching tags in classifier precedence order; never empty.
std::vector<FamilyTag> detect_family(const SeifertData& sd);

}  // namespace tightsf
