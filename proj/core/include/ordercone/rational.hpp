#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ordercone {

using Integer = mpz_class;

/// Arbitrary-precision rational; GMP keeps values in lowest terms with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;

/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// canonicalize, so ratios must be built through here. Throws
/// Error(PreconditionViolated) for a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (decimal integers, q != 0). Throws
/// Error(ParseError) on anything else, including decimal points.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace ordercone
