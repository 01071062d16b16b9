#include "tightsf/arith.hpp"

#include <cctype>

namespace tightsf {

Int floor_div(const Int& a, const Int& b)
{
    if (b == 0)
        throw DomainError("division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int floor(const Rational& x)
{
    return floor_div(x.get_num(), x.get_den());
}

Int abs(const Int& x)
{
    return x < 0 ? Int(-x) : x;
}

Rational make_rational(const Int& num, const Int& den)
{
    if (den == 0)
        throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Int binomial(unsigned long n, unsigned long k)
{
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::string to_string(const Int& x)
{
    return x.get_str();
}

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Int parse_int(std::string_view text)
{
    std::string_view s = trim(text);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty())
        throw ParseError("expected an integer, got '" + std::string(text) + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("expected an integer, got '" + std::string(text) + "'");
    std::string buf(s.front() == '+' ? s.substr(1) : s);
    return Int(buf, 10);
}

Rational parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

}  // namespace tightsf
