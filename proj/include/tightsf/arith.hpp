#pragma once

// Exact integer and rational arithmetic. Everything in the library is built on
// these two types; there is no floating point anywhere.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tightsf {

using Int = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (slopes, Seifert specs, diagram files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input outside an operation's mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

Int floor_div(const Int& a, const Int& b);
Int floor(const Rational& x);
Int abs(const Int& x);

/// Canonical num/den with den > 0. Throws DomainError on den == 0.
Rational make_rational(const Int& num, const Int& den);

Int binomial(unsigned long n, unsigned long k);

std::string to_string(const Int& x);
std::string to_string(const Rational& x);

Int parse_int(std::string_view text);
/// Accepts "p", "p/q" (q may be negative, must be nonzero).
Rational parse_rational(std::string_view text);

inline bool fits_long(const Int& x) { return x.fits_slong_p(); }

}  // namespace tightsf
