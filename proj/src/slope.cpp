#include "tightsf/slope.hpp"

#include <cctype>

namespace tightsf {

Slope::Slope(const Int& num, const Int& den) : num_(num), den_(den)
{
    if (num_ == 0 && den_ == 0)
        throw DomainError("slope 0/0 is undefined");
    if (den_ == 0) {
        num_ = 1;
        return;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    num_ /= g;
    den_ /= g;
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Slope::Slope(const Rational& value) : num_(value.get_num()), den_(value.get_den())
{
    // mpq_class values are canonical only after canonicalize(); be safe.
    *this = Slope(num_, den_);
}

Slope Slope::from_vector(const Int& x, const Int& y)
{
    if (x == 0 && y == 0)
        throw DomainError("zero vector has no slope");
    return Slope(y, x);
}

Slope Slope::parse(std::string_view text)
{
    std::string lowered;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lowered == "inf" || lowered == "infinity" || lowered == "1/0" || lowered == "-1/0")
        return infinity();
    auto slash = lowered.find('/');
    if (slash == std::string::npos)
        return Slope(parse_int(lowered), Int(1));
    Int num = parse_int(std::string_view(lowered).substr(0, slash));
    Int den = parse_int(std::string_view(lowered).substr(slash + 1));
    if (den == 0)
        throw ParseError("slope '" + std::string(text) + "' has zero denominator; write 'inf'");
    return Slope(num, den);
}

Rational Slope::value() const
{
    if (is_infinite())
        throw DomainError("slope inf has no rational value");
    return Rational(num_, den_);
}

std::string Slope::str() const
{
    if (is_infinite())
        return "inf";
    if (den_ == 1)
        return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

std::pair<Int, Int> slope_vec(const Slope& s)
{
    return {s.den(), s.num()};
}

bool linear_less(const Slope& a, const Slope& b)
{
    if (a.is_infinite())
        return false;
    if (b.is_infinite())
        return true;
    return a.num() * b.den() < b.num() * a.den();
}

UniMat::UniMat(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
{
    Int det = a_ * d_ - b_ * c_;
    if (det != 1 && det != -1)
        throw DomainError("matrix " + str() + " is not unimodular (det " + det.get_str() + ")");
}

UniMat UniMat::inverse() const
{
    // inverse of [[a,b],[c,d]] is det * [[d,-b],[-c,a]] when det = +-1
    Int e = det();
    return UniMat(e * d_, -e * b_, -e * c_, e * a_);
}

UniMat operator*(const UniMat& l, const UniMat& r)
{
    return UniMat(l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_,
                  l.c_ * r.a_ + l.d_ * r.c_, l.c_ * r.b_ + l.d_ * r.d_);
}

std::string UniMat::str() const
{
    return "[[" + a_.get_str() + "," + b_.get_str() + "],[" + c_.get_str() + "," + d_.get_str() + "]]";
}

Slope apply_mat(const UniMat& m, const Slope& s)
{
    auto [x, y] = slope_vec(s);
    auto [x2, y2] = m.apply(x, y);
    return Slope::from_vector(x2, y2);
}

}  // namespace tightsf
