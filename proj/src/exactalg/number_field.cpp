#include "strata/exactalg/number_field.hpp"

#include <ostream>
#include <sstream>

namespace strata {

NumberField::NumberField(RationalPoly min_poly) : min_poly_(std::move(min_poly)) {
  if (min_poly_.size() < 2 || sgn(min_poly_.back()) == 0) {
    throw std::invalid_argument("minimal polynomial needs degree >= 1 and a nonzero leading coefficient");
  }
  monic_ = rpoly::monic(min_poly_);
  const int n = degree();
  // high_powers_[k] = z^(n+k) reduced, built by repeated multiplication by z.
  RationalPoly cur(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] = -monic_[static_cast<std::size_t>(i)];
  for (int k = 0; k + 1 < n; ++k) {
    high_powers_.push_back(cur);
    RationalPoly next(static_cast<std::size_t>(n));
    const Rational top = cur.back();
    for (int i = n - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    for (int i = 0; i < n; ++i) next[static_cast<std::size_t>(i)] -= top * monic_[static_cast<std::size_t>(i)];
    cur = std::move(next);
  }
}

std::shared_ptr<const NumberField> NumberField::make(RationalPoly min_poly) {
  return std::make_shared<const NumberField>(std::move(min_poly));
}

const std::shared_ptr<const NumberField>& NumberField::rationals() {
  static const auto q = make({Rational(0), Rational(1)});
  return q;
}

std::shared_ptr<const NumberField> NumberField::quadratic(const Integer& d) {
  return make({Rational(-d), Rational(0), Rational(1)});
}

bool NumberField::is_rationals() const {
  return degree() == 1 && sgn(monic_[0]) == 0;
}

RationalPoly NumberField::reduce(const RationalPoly& p) const {
  const auto n = static_cast<std::size_t>(degree());
  RationalPoly out(n);
  for (std::size_t i = 0; i < std::min(n, p.size()); ++i) out[i] = p[i];
  if (p.size() <= n) return out;
  if (p.size() > 2 * n - 1) {
    RationalPoly q, r;
    rpoly::divmod(p, monic_, q, r);
    for (std::size_t i = 0; i < n; ++i) out[i] = i < r.size() ? r[i] : Rational(0);
    return out;
  }
  for (std::size_t k = n; k < p.size(); ++k) {
    if (sgn(p[k]) == 0) continue;
    const RationalPoly& zk = high_powers_[k - n];
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(zk[i]) != 0) out[i] += p[k] * zk[i];
    }
  }
  return out;
}

ZeroDivisor::ZeroDivisor(RationalPoly factor)
    : std::domain_error("element shares the factor " + rpoly::to_string(factor) + " with the modulus"),
      factor_(std::move(factor)) {}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, const RationalPoly& poly) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("null field");
  coeffs_ = field_->reduce(poly);
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  return FieldElement(field, RationalPoly{Rational(0), Rational(1)});
}

std::vector<Rational> FieldElement::coeffs_in(const NumberField& field) const {
  if (field_ && !(*field_ == field)) throw FieldMismatch();
  std::vector<Rational> out(static_cast<std::size_t>(field.degree()));
  for (std::size_t i = 0; i < coeffs_.size() && i < out.size(); ++i) out[i] = coeffs_[i];
  return out;
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

bool FieldElement::is_one() const { return is_rational() && coeffs_[0] == 1; }

FieldElement FieldElement::in(const FieldPtr& field) const {
  FieldElement out = *this;
  out.embed(field);
  return out;
}

FieldPtr FieldElement::common_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field_) return b.field_;
  if (!b.field_ || a.field_ == b.field_) return a.field_;
  if (!(*a.field_ == *b.field_)) throw FieldMismatch();
  return a.field_;
}

void FieldElement::embed(const FieldPtr& field) {
  if (!field || field_ == field) return;
  if (field_) {
    if (!(*field_ == *field)) throw FieldMismatch();
    field_ = field;
    return;
  }
  field_ = field;
  coeffs_.resize(static_cast<std::size_t>(field->degree()));
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (!field_ && !o.field_) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  embed(common_field(*this, o));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  if (!field_ && !o.field_) {
    coeffs_[0] -= o.coeffs_[0];
    return *this;
  }
  embed(common_field(*this, o));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (o.is_rational()) {
    if (o.field_) embed(common_field(*this, o));
    const Rational c = o.coeffs_[0];
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  if (is_rational()) {
    const Rational c = coeffs_[0];
    field_ = common_field(*this, o);
    coeffs_ = o.coeffs_;
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  field_ = common_field(*this, o);
  RationalPoly prod(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (sgn(o.coeffs_[j]) != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = field_->reduce(prod);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  if (o.is_rational()) {
    if (sgn(o.coeffs_[0]) == 0) throw std::domain_error("division by zero");
    if (o.field_) embed(common_field(*this, o));
    const Rational c = o.coeffs_[0];
    for (auto& x : coeffs_) x /= c;
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_ && !(*a.field_ == *b.field_)) return false;
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const bool ha = i < a.coeffs_.size();
    const bool hb = i < b.coeffs_.size();
    if (ha && hb) {
      if (a.coeffs_[i] != b.coeffs_[i]) return false;
    } else if (ha) {
      if (sgn(a.coeffs_[i]) != 0) return false;
    } else if (sgn(b.coeffs_[i]) != 0) {
      return false;
    }
  }
  return true;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) {
    FieldElement out = *this;
    out.coeffs_[0] = 1 / coeffs_[0];
    return out;
  }
  // Extended Euclid on (x, m): maintain s with s*x = r (mod m).
  const RationalPoly& m = field_->monic_min_poly();
  RationalPoly r0 = m;
  RationalPoly r1 = coeffs_;
  rpoly::trim(r1);
  RationalPoly s0;                  // coefficient of x for r0
  RationalPoly s1 = {Rational(1)};  // coefficient of x for r1
  while (rpoly::degree(r1) > 0) {
    RationalPoly q, r;
    rpoly::divmod(r0, r1, q, r);
    RationalPoly s = rpoly::sub(s0, rpoly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) {
    // gcd(x, m) = r0 has positive degree.
    throw ZeroDivisor(rpoly::monic(r0));
  }
  return FieldElement(field_, rpoly::scale(s1, 1 / r1[0]));
}

FieldElement nf_inverse(const FieldElement& x) { return x.inverse(); }

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement out = FieldElement(1).in(field_);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return out;
}

std::string FieldElement::to_string() const { return rpoly::to_string(coeffs_, 'z'); }

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

}  // namespace strata
