#include "tightsf/contfrac.hpp"

namespace tightsf {

bool NegContFrac::is_canonical() const
{
    for (const Int& a : entries)
        if (a > -2)
            return false;
    return true;
}

std::string NegContFrac::str() const
{
    std::string out = "[";
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (k)
            out += ",";
        out += entries[k].get_str();
    }
    return out + "]";
}

NegContFrac expand(const Slope& x)
{
    if (x.is_infinite() || x.num() >= -x.den())
        throw DomainError("slope " + x.str() + " is not of the form -1/r with r in (0,1)");
    NegContFrac cf;
    // x = n/d with n < -d < 0. Each step takes a = floor(x) and continues with
    // 1/(a - x), which is again < -1 unless x was an integer.
    Int n = x.num();
    Int d = x.den();
    while (true) {
        Int a = floor_div(n, d);
        if (a * d == n) {
            cf.entries.push_back(a);
            break;
        }
        cf.entries.push_back(a);
        // x' = 1/(a - x) = d / (a*d - n)
        Int next_num = d;
        Int next_den = a * d - n;  // negative
        n = -next_num;
        d = -next_den;
    }
    return cf;
}

Slope evaluate(const NegContFrac& cf)
{
    if (cf.entries.empty())
        return Slope::infinity();
    // Track value as num/den; start from the last entry.
    Int num = cf.entries.back();
    Int den = 1;
    for (auto it = cf.entries.rbegin() + 1; it != cf.entries.rend(); ++it) {
        if (num == 0)
            throw DomainError("continued fraction " + cf.str() + " has a zero intermediate value");
        // a - den/num = (a*num - den)/num
        Int new_num = *it * num - den;
        den = num;
        num = new_num;
    }
    return Slope(num, den);
}

Convergents convergents(const Slope& x)
{
    NegContFrac cf = expand(x);
    Convergents c;
    c.q = -x.num();
    c.p = x.den();
    if (cf.entries.size() == 1) {
        c.u = 0;
        c.v = 1;
        return c;
    }
    NegContFrac head{{cf.entries.begin(), cf.entries.end() - 1}, false};
    Slope t = evaluate(head);  // -v/u, reduced, so u > 0
    c.v = -t.num();
    c.u = t.den();
    return c;
}

NegContFrac reverse_shift(const NegContFrac& cf)
{
    if (cf.entries.empty())
        throw DomainError("reverse_shift of an empty continued fraction");
    NegContFrac out{{cf.entries.rbegin(), cf.entries.rend()}, true};
    out.entries.back() += 1;
    return out;
}

Int t_count(const Rational& r)
{
    if (r <= 0 || r >= 1)
        throw DomainError("T(r) needs r in (0,1), got " + to_string(r));
    NegContFrac cf = expand(Slope(Int(-r.get_den()), r.get_num()));
    Int product = 1;
    for (const Int& a : cf.entries)
        product *= a + 1;
    return abs(product);
}

Int honda_count(const Slope& s)
{
    if (s.is_infinite() || s.num() > -s.den())
        throw DomainError("solid torus count needs boundary slope <= -1, got " + s.str());
    if (s.num() == -s.den())
        return 1;
    NegContFrac cf = expand(s);
    Int product = cf.entries.back();
    for (std::size_t k = 0; k + 1 < cf.entries.size(); ++k)
        product *= cf.entries[k] + 1;
    return abs(product);
}

}  // namespace tightsf
