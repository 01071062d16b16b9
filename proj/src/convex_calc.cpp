#include "tightsf/convex_calc.hpp"

#include "tightsf/contfrac.hpp"

namespace tightsf {

Slope measured_slope(int i, const SeifertData& sd, const Int& n)
{
    if (n >= 0)
        throw DomainError("twisting number must be negative, got " + n.get_str());
    // boundary slope 1/n of a standard neighbourhood is the vector (n, 1)
    return apply_mat(sd.measuring_matrix(i), Slope(Int(1), n));
}

Slope rounded_slope(const Slope& sA, const Slope& sB, const Int& delta)
{
    if (delta == 0)
        throw DomainError("edge rounding needs a nonzero intersection number");
    if (sA.is_infinite() || sB.is_infinite() || delta % sA.den() != 0 || delta % sB.den() != 0)
        throw DomainError("imbalanced dividing sets: " + sA.str() + " and " + sB.str() +
                          " are not both over " + delta.get_str() + "; a bypass exists instead");
    Rational total = sA.value() + sB.value() - make_rational(Int(1), delta);
    total.canonicalize();
    return Slope(total);
}

Slope to_v3_coordinates(const SeifertData& sd, const Slope& outer)
{
    // (alpha, beta) -> (-beta, alpha): the slope is negated across the torus
    return apply_mat(sd.measuring_matrix(3).inverse(), Slope(Int(-outer.num()), outer.den()));
}

SlopeCoeffs slope_coeffs(const SeifertData& sd)
{
    const Convergents& c1 = sd.conv[0];
    const Convergents& c2 = sd.conv[1];
    const Convergents& c3 = sd.conv[2];
    const Rational r1(c1.p, c1.q), r2(c2.p, c2.q), r3(c3.p, c3.q);
    const Rational u3_v3(c3.u, c3.v);
    const Rational v1_q1(c1.v, c1.q);
    const Rational tail = make_rational(c1.u * c2.q + c2.q - 1, c1.q * c2.q);

    SlopeCoeffs k;
    k.A = r1 + r2 + r3 - 2;
    k.C = 2 - r1 - r2 - u3_v3;
    k.F = (r3 + r2 - 2) * v1_q1 + tail;
    k.D = (2 - r2 - u3_v3) * v1_q1 - tail;
    for (Rational* x : {&k.A, &k.C, &k.F, &k.D})
        x->canonicalize();
    return k;
}

namespace {

Slope slope_from_rationals(Rational num, Rational den)
{
    if (den == 0) {
        if (num == 0)
            throw DomainError("slope undefined at this twisting");
        return Slope::infinity();
    }
    Rational q = num / den;
    q.canonicalize();
    return Slope(q);
}

}  // namespace

Slope s_n1(const SlopeCoeffs& coeffs, const SeifertData& sd, const Int& n1)
{
    if (n1 >= 0)
        throw DomainError("n1 must be negative, got " + n1.get_str());
    const Convergents& c3 = sd.conv[2];
    Rational num = (coeffs.A * n1 + coeffs.F) * c3.q;
    Rational den = (coeffs.C * n1 + coeffs.D) * c3.v;
    return slope_from_rationals(num, den);
}

std::optional<SteppedSlope> s_n1_stepwise(const SeifertData& sd, const Int& n1)
{
    const Convergents& c1 = sd.conv[0];
    const Convergents& c2 = sd.conv[1];
    Int delta = c1.q * n1 + c1.v;
    Int shifted = delta - c2.v;
    if (shifted % c2.q != 0)
        return std::nullopt;
    Int n2 = shifted / c2.q;
    if (n2 >= 0)
        return std::nullopt;
    Slope s1 = measured_slope(1, sd, n1);
    Slope s2 = measured_slope(2, sd, n2);
    Slope rounded = rounded_slope(s1, s2, delta);
    return SteppedSlope{n2, rounded, to_v3_coordinates(sd, rounded)};
}

bool cyclically_increasing(const std::vector<Slope>& seq)
{
    if (seq.size() < 2)
        return true;
    int wraps = 0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (seq[i] == seq[i + 1])
            return false;
        if (!linear_less(seq[i], seq[i + 1]))
            ++wraps;
    }
    if (wraps == 0)
        return true;
    return wraps == 1 && linear_less(seq.back(), seq.front());
}

LimitAnalysis limit_analysis(const SlopeCoeffs& coeffs, const SeifertData& sd)
{
    if (coeffs.A >= 0 && coeffs.A < Rational(1, 4))
        throw DomainError("gap region: A = " + to_string(coeffs.A) + " lies in [0, 1/4)");
    const Convergents& c1 = sd.conv[0];
    const Convergents& c2 = sd.conv[1];
    const Convergents& c3 = sd.conv[2];

    std::vector<Slope> seq;
    seq.reserve(kLimitWindow);
    for (long n1 = -1; n1 >= -kLimitWindow; --n1)
        seq.push_back(s_n1(coeffs, sd, Int(n1)));

    LimitAnalysis out{
        slope_from_rationals(coeffs.A * c3.q, coeffs.C * c3.v),
        cyclically_increasing(seq),
        coeffs.A * coeffs.D == coeffs.C * coeffs.F,
        false,
        Rational(c1.p, c1.q) + Rational(c2.p, c2.q) <= 1 || (coeffs.A > 0 && coeffs.C < 0),
        Slope(Int(c3.p - c3.q), Int(c3.v - c3.u)),
    };
    out.threshold_ok = !out.limit.is_infinite() && out.limit.value() <= out.threshold.value();
    return out;
}

SeifertData mn_manifold(long n)
{
    if (n < 1)
        throw DomainError("M_n needs n >= 1");
    return normalize({Rational(1, 2), Rational(2, 3), Rational(5 * n + 1, 6 * n + 1)}, Int(-2));
}

UpperBound mn_upper_bound(long n)
{
    const SeifertData sd = mn_manifold(n);
    const Convergents& c1 = sd.conv[0];
    const Convergents& c2 = sd.conv[1];
    UpperBound out;
    out.total = 0;
    for (long k = 0; k < n; ++k) {
        // both legs thickened until their annulus intersections reach -t, t = 6k+1
        Int m1 = -3 * k - 1;
        Int m2 = -2 * k - 1;
        Int delta = c1.q * m1 + c1.v;
        if (delta != c2.q * m2 + c2.v)
            throw Error("unbalanced annulus in the upper-bound chain");
        Slope rounded = rounded_slope(measured_slope(1, sd, m1), measured_slope(2, sd, m2), delta);
        Slope boundary = to_v3_coordinates(sd, rounded);
        Int count = honda_count(boundary);
        out.total += count;
        out.per_k.push_back({k, delta, rounded, boundary, count});
    }
    return out;
}

bool twist_step_allowed(const Int& n, const Slope& ruling)
{
    if (ruling == Slope(0))
        throw DomainError("ruling slope 0 has no reciprocal");
    Rational reciprocal = ruling.is_infinite() ? Rational(0) : make_rational(ruling.den(), ruling.num());
    reciprocal.canonicalize();
    return reciprocal >= Rational(n + 1);
}

ImbalanceCheck imbalance_check(const SeifertData& sd, long span)
{
    const Convergents& c1 = sd.conv[0];
    const Convergents& c2 = sd.conv[1];
    ImbalanceCheck out;
    out.equal_denominators = c1.q == c2.q;
    out.bound = out.equal_denominators ? c1.q : Int(c1.q * c2.q);
    out.below = out.equal_denominators ? Int(1) : c2.q;
    out.holds = true;
    for (long step = 1; step <= span; ++step) {
        Int n1 = -out.below - step;
        if (abs(c1.q * n1 + c1.v) <= out.bound)
            out.holds = false;
    }
    return out;
}

}  // namespace tightsf
