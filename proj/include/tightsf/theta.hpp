#pragma once

// theta(xi) = c1^2(X, J) - 3 sigma(X) - 2 chi(X) for a 4-manifold X built from
// B^4 by attaching 2-handles along a framed link, read off the linking matrix
// and the rotation numbers of the Legendrian attaching curves.

#include "tightsf/arith.hpp"
#include "tightsf/linalg.hpp"

#include <string_view>
#include <vector>

namespace tightsf {

struct SurgeryDiagram {
    IntMatrix linking;     // symmetric m x m
    std::vector<Int> rot;  // length m

    std::size_t size() const { return rot.size(); }
};

/// {"L": [[...], ...], "rot": [...]}; integers may also be given as strings.
SurgeryDiagram parse_diagram_json(std::string_view json_text);

/// rot^T x where L x = rot. Throws DomainError if rot is not in the column span.
Rational c1_squared(const SurgeryDiagram& d);

struct ThetaValue {
    Rational c1_squared;
    long sigma;
    long chi;   // 1 + m
    Rational theta;
};

ThetaValue theta(const SurgeryDiagram& d);

SurgeryDiagram direct_sum(const SurgeryDiagram& a, const SurgeryDiagram& b);

/// Negative definite E8 plumbing (all framings -2).
IntMatrix e8_matrix();

}  // namespace tightsf
