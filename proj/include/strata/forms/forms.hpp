#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/exactalg/poly.hpp"

namespace strata {

/// A point (alpha : beta) of the projective line, i.e. the linear factor
/// beta*x - alpha*y. Always stored canonically: beta = 1 when beta != 0,
/// otherwise (1 : 0).
class ProjRoot {
 public:
  ProjRoot(const FieldElement& alpha, const FieldElement& beta);

  static ProjRoot affine(const FieldElement& a) { return ProjRoot(a, FieldElement(1)); }
  static ProjRoot infinity() { return ProjRoot(FieldElement(1), FieldElement(0)); }

  const FieldElement& alpha() const { return alpha_; }
  const FieldElement& beta() const { return beta_; }
  bool is_infinity() const { return beta_.is_zero(); }

  /// Coefficients of beta*x - alpha*y: index k holds the x^k y^(1-k) term.
  FieldPoly linear_factor() const;

  friend bool operator==(const ProjRoot& a, const ProjRoot& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }
  friend bool operator!=(const ProjRoot& a, const ProjRoot& b) { return !(a == b); }

  std::string to_string() const;

 private:
  FieldElement alpha_;
  FieldElement beta_;
};

struct RootFactor {
  ProjRoot root;
  int mult = 0;
};

/// scalar * prod (beta_i x - alpha_i y)^{m_i} with pairwise distinct roots.
class FactoredForm {
 public:
  FactoredForm() = default;
  /// Repeated roots are merged; zero multiplicities are dropped.
  FactoredForm(FieldElement scalar, std::vector<RootFactor> factors);

  static FactoredForm constant(FieldElement scalar) { return FactoredForm(std::move(scalar), {}); }

  const FieldElement& scalar() const { return scalar_; }
  const std::vector<RootFactor>& factors() const { return factors_; }
  int degree() const;
  int root_count() const { return static_cast<int>(factors_.size()); }
  /// Multiplicities sorted in decreasing order (the root partition).
  std::vector<int> multiplicity_profile() const;
  /// 0 if `root` is not a root.
  int multiplicity_of(const ProjRoot& root) const;

  FactoredForm with_scalar(FieldElement s) const;
  friend FactoredForm operator*(const FactoredForm& f, const FactoredForm& g);

  /// Same roots with the same multiplicities (so proportional as forms).
  bool same_roots(const FactoredForm& other) const;
  friend bool operator==(const FactoredForm& f, const FactoredForm& g) {
    return f.scalar_ == g.scalar_ && f.same_roots(g);
  }

 private:
  FieldElement scalar_ = FieldElement(1);
  std::vector<RootFactor> factors_;
};

/// A binary form of degree d as a coefficient vector: coeffs(k) multiplies
/// x^k y^(d-k). With y = 1 this is also the dehomogenised polynomial in x.
struct BinaryForm {
  int degree = 0;
  FieldVector coeffs;

  bool is_zero() const { return is_zero_vector(coeffs); }
};

BinaryForm expand(const FactoredForm& f);
BinaryForm multiply(const BinaryForm& f, const BinaryForm& g);

/// Product of the distinct linear factors of f, scalar 1.
FactoredForm radical(const FactoredForm& f);

/// Root-wise minimum of multiplicities, scalar 1. `fs` must be nonempty.
FactoredForm gcd_forms(std::span<const FactoredForm> fs);

bool divides(const FactoredForm& g, const FactoredForm& f);
/// f / g as factored forms; throws std::invalid_argument unless g divides f.
FactoredForm quotient(const FactoredForm& f, const FactoredForm& g);

/// Determinant of the k x k matrix of derivatives of orders 0..k-1, computed
/// exactly by evaluation at integer points and interpolation.
FieldPoly wronskian(std::span<const FieldPoly> fs);

/// Applies (alpha : beta) -> (a alpha + b beta : c alpha + d beta).
ProjRoot mobius(const ProjRoot& p, const FieldElement& a, const FieldElement& b, const FieldElement& c,
                const FieldElement& d);

}  // namespace strata
