#include "tightsf/seifert.hpp"

#include <algorithm>
#include <cctype>

namespace tightsf {

namespace {

Convergents convergents_of(const Rational& r)
{
    return convergents(Slope(Int(-r.get_den()), r.get_num()));
}

std::string strip(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

UniMat SeifertData::measuring_matrix(int i) const
{
    if (i < 1 || i > 3)
        throw DomainError("singular fibre index must be 1, 2 or 3");
    const Convergents& c = conv[i - 1];
    if (i == 1)
        return attaching[0];
    return UniMat(c.q, c.v, c.q - c.p, c.v - c.u);
}

SeifertData normalize(const std::array<Rational, 3>& raw, const Int& e0_raw)
{
    SeifertData sd;
    sd.e0 = e0_raw;
    for (std::size_t i = 0; i < 3; ++i) {
        if (raw[i].get_den() == 1)
            throw DomainError("invariant " + to_string(raw[i]) +
                              " is an integer: fewer than three singular fibers");
        Int whole = floor(raw[i]);
        sd.e0 += whole;
        sd.r[i] = raw[i] - Rational(whole);
    }
    std::sort(sd.r.begin(), sd.r.end());
    for (std::size_t i = 0; i < 3; ++i) {
        sd.conv[i] = convergents_of(sd.r[i]);
        const Convergents& c = sd.conv[i];
        sd.attaching[i] = UniMat(c.q, c.v, -c.p, -c.u);
    }
    return sd;
}

SeifertData parse_seifert(std::string_view text)
{
    std::string s = strip(text);
    if (s.size() >= 3 && (s[0] == 'M' || s[0] == 'm') && s[1] == '(' && s.back() == ')')
        s = s.substr(2, s.size() - 3);
    if (s.empty())
        throw ParseError("empty Seifert specification");
    Int e0 = 0;
    std::string rest = s;
    auto semi = s.find(';');
    if (semi != std::string::npos) {
        e0 = parse_int(s.substr(0, semi));
        rest = s.substr(semi + 1);
    }
    auto parts = split(rest, ',');
    if (parts.size() != 3)
        throw ParseError("expected three Seifert invariants in '" + std::string(text) + "'");
    std::array<Rational, 3> raw;
    for (std::size_t i = 0; i < 3; ++i) {
        try {
            raw[i] = parse_rational(parts[i]);
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
    return normalize(raw, e0);
}

std::string to_string(const SeifertData& sd)
{
    return "M(" + sd.e0.get_str() + "; " + to_string(sd.r[0]) + ", " + to_string(sd.r[1]) + ", " +
           to_string(sd.r[2]) + ")";
}

Int h1_order(const SeifertData& sd)
{
    Rational total = Rational(sd.e0) + sd.invariant_sum();
    Rational order = total * Rational(sd.conv[0].q * sd.conv[1].q * sd.conv[2].q);
    order.canonicalize();
    // q1 q2 q3 (e0 + sum) is an integer
    return abs(order.get_num());
}

IntMatrix linking_matrix(const SeifertData& sd)
{
    std::array<NegContFrac, 3> legs;
    std::size_t size = 1;
    for (std::size_t i = 0; i < 3; ++i) {
        legs[i] = expand(Slope(Int(-sd.r[i].get_den()), sd.r[i].get_num()));
        size += legs[i].entries.size();
    }
    IntMatrix m = IntMatrix::square(size);
    m(0, 0) = sd.e0;
    std::size_t next = 1;
    for (const NegContFrac& leg : legs) {
        std::size_t prev = 0;
        for (const Int& a : leg.entries) {
            m(next, next) = a;
            m(prev, next) = 1;
            m(next, prev) = 1;
            prev = next;
            ++next;
        }
    }
    return m;
}

std::string FamilyTag::str() const
{
    switch (kind) {
    case FamilyKind::wrong_e0:
        return "WrongE0";
    case FamilyKind::torus_bundle:
        return "TorusBundle(" + std::to_string(parameter) + ")";
    case FamilyKind::thm2_family:
        return "Thm2Family(n=" + std::to_string(parameter) + ")";
    case FamilyKind::thm1_case3:
        return "Thm1Case3(k=" + std::to_string(parameter) + ")";
    case FamilyKind::sum_ge_9_4:
        return "SumGE9over4";
    case FamilyKind::sum_lt_2:
        return "SumLT2";
    case FamilyKind::degenerate_sum_2:
        return "DegenerateSum2";
    case FamilyKind::gap_other:
        return "GapOther";
    }
    return "?";
}

std::vector<FamilyTag> detect_family(const SeifertData& sd)
{
    if (sd.e0 != -2)
        return {{FamilyKind::wrong_e0}};

    std::vector<FamilyTag> tags;
    const auto& r = sd.r;
    const std::array<std::array<Rational, 3>, 3> torus_bundles = {{
        {Rational(1, 2), Rational(3, 4), Rational(3, 4)},
        {Rational(1, 2), Rational(2, 3), Rational(5, 6)},
        {Rational(2, 3), Rational(2, 3), Rational(2, 3)},
    }};
    for (std::size_t t = 0; t < torus_bundles.size(); ++t)
        if (r == torus_bundles[t])
            tags.push_back({FamilyKind::torus_bundle, static_cast<long>(t + 1)});

    if (r[0] == Rational(1, 2) && r[1] == Rational(2, 3)) {
        const Int& p = r[2].get_num();
        const Int& q = r[2].get_den();
        // (5n+1)/(6n+1) is reduced, so q = 6n+1 and p = 5n+1
        if ((q - 1) % 6 == 0 && q > 1 && p == 5 * ((q - 1) / 6) + 1) {
            Int n = (q - 1) / 6;
            if (n.fits_slong_p())
                tags.push_back({FamilyKind::thm2_family, n.get_si()});
        }
        if (q == p + 1 && p >= 6 && p.fits_slong_p())
            tags.push_back({FamilyKind::thm1_case3, p.get_si()});
    }

    Rational sum = sd.invariant_sum();
    if (sum >= Rational(9, 4))
        tags.push_back({FamilyKind::sum_ge_9_4});
    else if (sum < 2)
        tags.push_back({FamilyKind::sum_lt_2});
    else if (sum == 2) {
        if (tags.empty())
            tags.push_back({FamilyKind::degenerate_sum_2});
    } else if (tags.empty()) {
        tags.push_back({FamilyKind::gap_other});
    }
    return tags;
}

}  // namespace tightsf
