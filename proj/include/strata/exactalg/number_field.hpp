#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/exactalg/rational.hpp"

namespace strata {

/// Q[z]/(m(z)) for a rational polynomial m of degree >= 1.
///
/// m is never assumed irreducible. Arithmetic is carried out in the quotient
/// ring; a failed inversion reports the common factor it ran into (see
/// ZeroDivisor), which is the only way reducibility is ever discovered.
class NumberField {
 public:
  /// `min_poly` is constant-term first; the leading coefficient must be
  /// nonzero and the degree at least 1.
  explicit NumberField(RationalPoly min_poly);

  static std::shared_ptr<const NumberField> make(RationalPoly min_poly);
  /// Q as Q[z]/(z).
  static const std::shared_ptr<const NumberField>& rationals();
  /// Q[z]/(z^2 - d) for a non-square integer d.
  static std::shared_ptr<const NumberField> quadratic(const Integer& d);

  int degree() const { return static_cast<int>(monic_.size()) - 1; }
  const RationalPoly& min_poly() const { return min_poly_; }
  const RationalPoly& monic_min_poly() const { return monic_; }
  bool is_rationals() const;

  /// Reduces an arbitrary polynomial modulo the minimal polynomial, returning
  /// exactly degree() coefficients.
  RationalPoly reduce(const RationalPoly& p) const;

  bool operator==(const NumberField& other) const { return monic_ == other.monic_; }

 private:
  RationalPoly min_poly_;
  RationalPoly monic_;
  // z^(n+k) mod m for k = 0 .. n-2, each of length n.
  std::vector<RationalPoly> high_powers_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Raised by inversion when the element shares a nontrivial factor with the
/// modulus. `factor()` is that monic common divisor of the minimal polynomial.
class ZeroDivisor : public std::domain_error {
 public:
  explicit ZeroDivisor(RationalPoly factor);
  const RationalPoly& factor() const { return factor_; }

 private:
  RationalPoly factor_;
};

class FieldMismatch : public std::invalid_argument {
 public:
  FieldMismatch() : std::invalid_argument("operands live in different number fields") {}
};

/// An element of a NumberField, or a bare rational constant.
///
/// A default-constructed element, or one built from an integer or Rational,
/// carries no field. Such constants combine with elements of any field;
/// mixing elements of two different fields raises FieldMismatch.
class FieldElement {
 public:
  FieldElement() : coeffs_(1) {}
  FieldElement(int v) : coeffs_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  FieldElement(long v) : coeffs_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  FieldElement(Rational v) : coeffs_{std::move(v)} {}  // NOLINT(google-explicit-constructor)
  /// Residue class of `poly` in `field`; `poly` may have any length.
  FieldElement(FieldPtr field, const RationalPoly& poly);

  /// The class of z in `field`.
  static FieldElement generator(const FieldPtr& field);

  /// Null for a field-less rational constant.
  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient vector of length `field->degree()` (padding a constant).
  std::vector<Rational> coeffs_in(const NumberField& field) const;

  bool is_zero() const;
  bool is_one() const;
  /// True when only the constant coefficient can be nonzero.
  bool is_rational() const;
  const Rational& rational_part() const { return coeffs_.front(); }

  /// The same value as an element of `field` (a constant is embedded).
  FieldElement in(const FieldPtr& field) const;

  FieldElement inverse() const;
  FieldElement pow(long e) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// e.g. "3/2 + z - 1/3*z^3"
  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Rational> coeffs_;

  static FieldPtr common_field(const FieldElement& a, const FieldElement& b);
  void embed(const FieldPtr& field);
};

/// Multiplicative inverse. Throws std::domain_error for zero and ZeroDivisor
/// when the element lies in a proper ideal of a reducible modulus.
FieldElement nf_inverse(const FieldElement& x);

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace strata
