#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strata/relations/relation.hpp"

namespace strata {

class DegenerateRoots : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Scales a nullspace vector: primitive integer with positive leading entry
/// when every entry is rational, otherwise leading nonzero entry 1.
FieldVector normalize_coefficients(const FieldVector& v);

/// 4 x^2 y^2 + (x^2 - y^2)^2 - (x^2 + y^2)^2 = 0 over Q(i) = Q[z]/(z^2 + 1).
SecantRelation classical_two_two_relation();

/// For nu = (k+2, k+1, k) and distinct p, q, r:
///   g1 = (x-p)^{k+2} (x-q)^{k+1} (x-r)^k,  g2 = (x-p)^{k+2} (x-r)^{k+1} (x-q)^k,
///   g3 = (x-q)^{k+2} (x-p)^{k+1} (x-r)^k,  g4 = (x-r)^{k+2} (x-p)^{k+1} (x-q)^k,
/// all multiples of Q = (x-p)^{k+1} (x-q)^k (x-r)^k. The coefficients come
/// from the nullspace of the four quadratic cofactors.
SecantRelation construct_adjacent_unit_jumps(int k, const FieldElement& p, const FieldElement& q,
                                             const FieldElement& r);

/// For nu = (k1+1, k1, k2+1, k2) with k1 >= k2 and distinct p, q, r, s:
///   g1 = R (x-p)(x-r), g2 = R (x-q)(x-r), g3 = R (x-p)(x-s), g4 = R (x-q)(x-s)
/// with R = (x-p)^{k1} (x-q)^{k1} (x-r)^{k2} (x-s)^{k2}.
SecantRelation construct_separated_unit_jumps(int k1, int k2, const FieldElement& p, const FieldElement& q,
                                              const FieldElement& r, const FieldElement& s);

/// The four quadratic cofactors of either construction as a 3 x 4 matrix
/// (column j holds the coefficients of the j-th quadratic).
FieldMatrix adjacent_cofactor_matrix(const FieldElement& p, const FieldElement& q, const FieldElement& r);
FieldMatrix separated_cofactor_matrix(const FieldElement& p, const FieldElement& q, const FieldElement& r,
                                      const FieldElement& s);

struct QuarticCubicSolution {
  Rational e1;  // a + b
  Rational e2;  // a * b
  std::vector<Rational> power_sums;  // alpha a^k + beta b^k for k = 0..3
  FieldElement a, b, alpha, beta;
  SecantRelation relation;
};

/// Solves (x+1)^4 - x^4 = alpha (x+a)^3 + beta (x+b)^3 exactly by power-sum
/// elimination and returns the resulting 4-term (4,3) relation over Q(sqrt 3).
QuarticCubicSolution solve_two_part_quartic_cubic();

/// The same 4-term relation built from caller-supplied constants:
/// y^3 (x+y)^4 - y^3 x^4 - l1 (x + a y)^3 y^4 - l2 (x + b y)^3 y^4.
SecantRelation quartic_cubic_relation(const FieldPtr& field, const FieldElement& a, const FieldElement& b,
                                      const FieldElement& l1, const FieldElement& l2);

/// a = 3 - sqrt 3, b = 3 + sqrt 3, L = (9 - 5 sqrt 3)/18 and 1 - L.
SecantRelation printed_quartic_cubic_relation();

struct QuinticCubicOutcome {
  bool min_poly_check = false;  // 3u^2 - u + 3 = 0 for u = (1 + sqrt(-35))/6
  bool symmetry_check = false;  // c -> 1/c swaps f1 <-> f3 and f2 <-> f4
  bool residual_zero = false;
  std::string modulus;          // the modulus the residual was computed in
  std::vector<std::string> residual;
  std::optional<SecantRelation> relation;  // set when the residual vanishes
};

/// The (5,3) relation f1 + f2 - f3 - f4 = 0 with
///   f(c) = (x + c^5 y)^3 (x + c^{-3} y)^5,  f1 = f(c), f2 = f(-c),
///   f3 = f(1/c), f4 = f(-1/c),
/// evaluated in Q[z]/(3z^8 - z^4 + 3) with c = z. A ZeroDivisor during the
/// computation restarts it modulo each factor found.
QuinticCubicOutcome verify_paper_53();

/// The four (5,3) forms for a given c, in the order f1..f4.
std::vector<FactoredForm> quintic_cubic_forms(const FieldElement& c);

}  // namespace strata
