#include "tightsf/farey.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tightsf {

Side parse_side(std::string_view text)
{
    if (text == "front")
        return Side::front;
    if (text == "back")
        return Side::back;
    throw ParseError("side must be 'front' or 'back', got '" + std::string(text) + "'");
}

const char* to_string(Side side)
{
    return side == Side::front ? "front" : "back";
}

Arc::Arc(Slope from_, Slope to_) : from(std::move(from_)), to(std::move(to_))
{
    if (from == to)
        throw DomainError("arc endpoints coincide at " + from.str());
}

Arc Arc::for_bypass(const Slope& dividing, const Slope& ruling, Side side)
{
    return side == Side::front ? Arc(ruling, dividing) : Arc(dividing, ruling);
}

bool farey_edge(const Slope& a, const Slope& b)
{
    Int cross = a.den() * b.num() - b.den() * a.num();
    return cross == 1 || cross == -1;
}

bool arc_contains(const Arc& arc, const Slope& x)
{
    if (x == arc.from || x == arc.to)
        return true;
    if (linear_less(arc.from, arc.to))
        return linear_less(arc.from, x) && linear_less(x, arc.to);
    // the arc passes through inf
    return linear_less(arc.from, x) || linear_less(x, arc.to);
}

Slope bypass_attach(const Slope& dividing, const Slope& ruling, Side side)
{
    if (dividing == ruling)
        throw DomainError("bypass needs ruling slope != dividing slope");
    if (farey_edge(dividing, ruling))
        return ruling;

    // Move the dividing slope p/q to inf with a determinant +1 matrix, which
    // preserves the cyclic order. Rows: (p, -q) and (x0, y0) with x0*q + y0*p = 1.
    const Int& p = dividing.num();
    const Int& q = dividing.den();
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    // s*q + t*p = g = 1 (g could be -1 never; gcdext returns g >= 0)
    UniMat to_inf(p, -q, s, t);

    // Neighbours of inf are the integers. The image arc runs from the image
    // of the ruling slope up to inf (front) or from inf up to it (back).
    Slope image = apply_mat(to_inf, ruling);
    const Int& a = image.num();
    const Int& b = image.den();  // > 0, image != inf because ruling != dividing
    Int nearest = side == Side::front ? Int(-floor_div(-a, b)) : floor_div(a, b);
    return apply_mat(to_inf.inverse(), Slope(nearest, Int(1)));
}

namespace {

// Farey neighbours a/b of s with 0 <= b <= bound. b must satisfy
// b p = +-1 (mod q), so walk the two residue classes.
std::vector<Slope> neighbours_up_to(const Slope& s, const Int& bound)
{
    std::vector<Slope> out;
    const Int& p = s.num();
    const Int& q = s.den();
    if (q == 1) {
        out.push_back(Slope::infinity());
        for (Int b = 1; b <= bound; ++b) {
            out.push_back(Slope(Int(b * p + 1), b));
            out.push_back(Slope(Int(b * p - 1), b));
        }
        return out;
    }
    Int inv;
    mpz_invert(inv.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    // b = inv (mod q) gives b p = 1, b = -inv gives b p = -1
    for (int e : {1, -1}) {
        for (Int b = e == 1 ? inv : Int(q - inv); b <= bound; b += q) {
            Int a = (b * p - e) / q;
            if (a * q - b * p != -e)
                throw std::logic_error("neighbour search out of step");
            out.push_back(Slope(a, b));
        }
    }
    return out;
}

std::optional<Slope> best_candidate(const Slope& dividing, const Slope& ruling, Side side,
                                    const std::vector<Slope>& candidates)
{
    const Arc arc = Arc::for_bypass(dividing, ruling, side);
    std::optional<Slope> best;
    for (const Slope& c : candidates) {
        if (!farey_edge(c, dividing) || !arc_contains(arc, c))
            continue;
        if (!best) {
            best = c;
            continue;
        }
        // c is closer to the ruling slope than best if it lies between them.
        bool closer = side == Side::front ? arc_contains(Arc(ruling, *best), c)
                                          : arc_contains(Arc(*best, ruling), c);
        if (closer && !(c == *best))
            best = c;
    }
    return best;
}

}  // namespace

Slope bypass_oracle(const Slope& dividing, const Slope& ruling, Side side, const Int& denom_bound)
{
    if (dividing == ruling)
        throw DomainError("bypass needs ruling slope != dividing slope");
    if (farey_edge(dividing, ruling))
        return ruling;
    if (dividing.is_infinite()) {
        // Neighbours of inf are all integers; only the two integers around the
        // ruling slope can be extremal, so search a window containing them.
        Int lo = floor(ruling.value()) - 1;
        std::vector<Slope> window;
        for (Int k = lo; k <= lo + 3; ++k)
            window.emplace_back(k, Int(1));
        return *best_candidate(dividing, ruling, side, window);
    }
    Int bound = denom_bound;
    if (bound < 1)
        bound = 1;
    while (true) {
        auto found = best_candidate(dividing, ruling, side, neighbours_up_to(dividing, bound));
        if (found) {
            auto again = best_candidate(dividing, ruling, side, neighbours_up_to(dividing, 2 * bound));
            if (again && *again == *found)
                return *found;
        }
        bound *= 2;
    }
}

Slope bypass_oracle(const Slope& dividing, const Slope& ruling, Side side)
{
    return bypass_oracle(dividing, ruling, side, dividing.den() + ruling.den());
}

}  // namespace tightsf
