#include "tightsf/floer.hpp"

#include <algorithm>
#include <set>

namespace tightsf {

bool ContactIndex::valid() const
{
    if (n < 1 || i < 0 || i > n - 1)
        return false;
    long bound = n - i - 1;
    if (j < -bound || j > bound)
        return false;
    long parity = (j - (n + 1 - i)) % 2;
    return parity == 0;
}

std::string ContactIndex::str() const
{
    return "(n=" + std::to_string(n) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
}

std::vector<ContactIndex> index_set(long n)
{
    if (n < 1)
        throw DomainError("index set needs n >= 1");
    std::vector<ContactIndex> out;
    for (long i = 0; i <= n - 1; ++i) {
        long bound = n - i - 1;
        for (long j = -bound; j <= bound; j += 2)
            out.push_back({n, i, j});
    }
    return out;
}

ExpansionVector::ExpansionVector(long n) : n_(n), coeffs_(static_cast<std::size_t>(n), Int(0))
{
    if (n < 1)
        throw DomainError("expansion vectors need n >= 1");
}

std::vector<long> ExpansionVector::grid() const
{
    std::vector<long> g;
    for (long jp = -n_ + 1; jp <= n_ - 1; jp += 2)
        g.push_back(jp);
    return g;
}

bool ExpansionVector::on_grid(long jp) const
{
    return jp >= -n_ + 1 && jp <= n_ - 1 && (jp + n_ - 1) % 2 == 0;
}

const Int& ExpansionVector::at(long jp) const
{
    if (!on_grid(jp))
        throw DomainError("index " + std::to_string(jp) + " is off the grid for n = " + std::to_string(n_));
    return coeffs_[static_cast<std::size_t>((jp + n_ - 1) / 2)];
}

Int& ExpansionVector::at(long jp)
{
    return const_cast<Int&>(static_cast<const ExpansionVector&>(*this).at(jp));
}

bool ExpansionVector::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

ExpansionVector ExpansionVector::operator-() const
{
    ExpansionVector out = *this;
    for (Int& c : out.coeffs_)
        c = -c;
    return out;
}

HalfLaurent HalfLaurent::monomial(long doubled_exponent, Int coefficient)
{
    HalfLaurent p;
    if (coefficient != 0)
        p.terms_[doubled_exponent] = std::move(coefficient);
    return p;
}

HalfLaurent HalfLaurent::from_terms(std::map<long, Int> terms)
{
    HalfLaurent p;
    p.terms_ = std::move(terms);
    std::erase_if(p.terms_, [](const auto& kv) { return kv.second == 0; });
    return p;
}

Int HalfLaurent::coefficient(long doubled_exponent) const
{
    auto it = terms_.find(doubled_exponent);
    return it == terms_.end() ? Int(0) : it->second;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b)
{
    HalfLaurent out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.terms_[ea + eb] += ca * cb;
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::string HalfLaurent::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    // highest power first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const long e = it->first;
        Int c = it->second;
        bool negative = c < 0;
        if (negative)
            c = -c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string power;
        if (e != 0) {
            if (e == 2)
                power = "t";
            else if (e % 2 == 0)
                power = "t^" + std::to_string(e / 2);
            else
                power = "t^(" + std::to_string(e) + "/2)";
        }
        if (power.empty())
            out += c.get_str();
        else if (c == 1)
            out += power;
        else
            out += c.get_str() + "*" + power;
    }
    return out;
}

ExpansionVector expansion(const ContactIndex& idx)
{
    if (!idx.valid())
        throw DomainError("invalid contact index " + idx.str());
    ExpansionVector v(idx.n);
    for (long k = 0; k <= idx.i; ++k) {
        Int c = binomial(static_cast<unsigned long>(idx.i), static_cast<unsigned long>(k));
        if (k % 2)
            c = -c;
        v.at(idx.j - idx.i + 2 * k) += c;
    }
    return v;
}

HalfLaurent laurent_image(const ContactIndex& idx)
{
    if (!idx.valid())
        throw DomainError("invalid contact index " + idx.str());
    const HalfLaurent difference = HalfLaurent::from_terms({{1, Int(1)}, {-1, Int(-1)}});
    HalfLaurent image = HalfLaurent::monomial(idx.j);
    for (long k = 0; k < idx.i; ++k)
        image = image * difference;
    return image;
}

ExpansionVector conjugate(const ExpansionVector& v)
{
    ExpansionVector out(v.n());
    for (long jp : v.grid())
        out.at(-jp) = v.at(jp);
    return out;
}

bool stein_obstructed(const ContactIndex& idx)
{
    if (!idx.valid())
        throw DomainError("invalid contact index " + idx.str());
    if (idx.i == 0 || idx.j != 0)
        return false;
    const ExpansionVector v = expansion(idx);
    const ExpansionVector w = conjugate(v);
    if (!(w == v || w == -v))
        return false;
    // Paired terms c(j') + c(-j') map to 2 F(c(j')) = 0 mod 2; only the
    // central coefficient survives the reduction.
    Int central = v.on_grid(0) ? v.at(0) : Int(0);
    return central % 2 == 0;
}

bool pairwise_distinct(long n)
{
    std::set<ExpansionVector> seen;
    for (const ContactIndex& idx : index_set(n))
        if (!seen.insert(expansion(idx)).second)
            return false;
    return true;
}

}  // namespace tightsf
