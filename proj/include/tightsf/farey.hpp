#pragma once

// The Farey tessellation on the boundary circle Q u {inf}.
//
// The circle is oriented by the increasing cyclic order
//   ..., -1, 0, 1, ..., inf, ..., -2, -1, ...
// "counterclockwise" below always means this direction. Swapping the
// orientation swaps the roles of the front and back sides.

#include "tightsf/slope.hpp"

namespace tightsf {

enum class Side { front, back };

Side parse_side(std::string_view text);
const char* to_string(Side side);

/// Closed arc running counterclockwise from `from` to `to`.
struct Arc {
    Slope from;
    Slope to;

    Arc(Slope from_, Slope to_);
    /// Arc used by a bypass: [ruling, dividing] on the front, [dividing, ruling] on the back.
    static Arc for_bypass(const Slope& dividing, const Slope& ruling, Side side);
};

bool farey_edge(const Slope& a, const Slope& b);

bool arc_contains(const Arc& arc, const Slope& x);

/// Dividing slope after attaching a bypass along a ruling curve: the point of
/// the bypass arc closest to the ruling slope that has a Farey edge to the
/// dividing slope.
Slope bypass_attach(const Slope& dividing, const Slope& ruling, Side side);

/// Exhaustive search version of bypass_attach. Candidates are Farey neighbours
/// of the dividing slope with denominator <= bound; the bound doubles until the
/// answer exists and survives one more doubling.
Slope bypass_oracle(const Slope& dividing, const Slope& ruling, Side side, const Int& denom_bound);
Slope bypass_oracle(const Slope& dividing, const Slope& ruling, Side side);

}  // namespace tightsf
