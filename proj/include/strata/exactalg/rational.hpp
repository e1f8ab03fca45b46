#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace strata {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional sign on p). The result is canonical.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Univariate polynomial over Q, constant term first. Trailing zeros are
/// trimmed by every routine below; the zero polynomial is the empty vector.
using RationalPoly = std::vector<Rational>;

namespace rpoly {

void trim(RationalPoly& p);
int degree(const RationalPoly& p);  // -1 for the zero polynomial
RationalPoly add(const RationalPoly& a, const RationalPoly& b);
RationalPoly sub(const RationalPoly& a, const RationalPoly& b);
RationalPoly mul(const RationalPoly& a, const RationalPoly& b);
RationalPoly scale(const RationalPoly& a, const Rational& c);
RationalPoly monic(const RationalPoly& a);
/// Euclidean division; `b` must be nonzero.
void divmod(const RationalPoly& a, const RationalPoly& b, RationalPoly& quot, RationalPoly& rem);
RationalPoly gcd(RationalPoly a, RationalPoly b);  // monic, or zero when both are zero
std::string to_string(const RationalPoly& p, char var = 'z');

}  // namespace rpoly

/// Squarefree integer part: n = s^2 * squarefree_part(n), sign preserved.
Integer squarefree_part(const Integer& n, Integer* square_root_of_cofactor = nullptr);

}  // namespace strata
