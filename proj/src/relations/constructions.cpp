#include "strata/relations/constructions.hpp"

#include <functional>

namespace strata {

namespace {

// scalar * prod (x - a_i y)^{m_i} * y^{y_mult}. The factor y is the
// canonical root (1 : 0) up to sign, so the sign is folded into the scalar.
FactoredForm xy_form(FieldElement scalar, const std::vector<std::pair<FieldElement, int>>& affine, int y_mult) {
  std::vector<RootFactor> factors;
  for (const auto& [a, m] : affine) factors.push_back({ProjRoot::affine(a), m});
  if (y_mult > 0) factors.push_back({ProjRoot::infinity(), y_mult});
  if (y_mult % 2 == 1) scalar = -scalar;
  return FactoredForm(std::move(scalar), std::move(factors));
}

FieldPoly linear(const FieldElement& root) {
  FieldPoly p(2);
  p(0) = -root;
  p(1) = FieldElement(1);
  return p;
}

FieldMatrix columns_of(const std::vector<FieldPoly>& polys, Eigen::Index rows) {
  FieldMatrix m = FieldMatrix::Constant(rows, static_cast<Eigen::Index>(polys.size()), FieldElement(0));
  for (std::size_t j = 0; j < polys.size(); ++j) {
    for (Eigen::Index i = 0; i < polys[j].size() && i < rows; ++i) m(i, static_cast<Eigen::Index>(j)) = polys[j](i);
  }
  return m;
}

FieldPtr field_of(std::initializer_list<const FieldElement*> xs) {
  FieldPtr f;
  for (const auto* x : xs) {
    if (x->field()) {
      if (f && !(*f == *x->field())) throw FieldMismatch();
      f = x->field();
    }
  }
  return f ? f : NumberField::rationals();
}

FieldVector single_null_vector(const FieldMatrix& m, const char* what) {
  auto basis = exact_nullspace(m);
  if (basis.size() != 1) {
    throw DegenerateRoots(std::string(what) + ": cofactor system has nullity " + std::to_string(basis.size()));
  }
  FieldVector v = normalize_coefficients(basis.front());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) throw DegenerateRoots(std::string(what) + ": a relation coefficient vanishes");
  }
  return v;
}

}  // namespace

FieldVector normalize_coefficients(const FieldVector& v) {
  FieldVector out = v;
  Eigen::Index lead = 0;
  while (lead < v.size() && v(lead).is_zero()) ++lead;
  if (lead == v.size()) return out;
  bool all_rational = true;
  for (Eigen::Index i = 0; i < v.size(); ++i) all_rational = all_rational && v(i).is_rational();
  if (!all_rational) {
    const FieldElement inv = v(lead).inverse();
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) * inv;
    return out;
  }
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Rational& q = v(i).rational_part();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(v(lead).rational_part()) < 0) factor = -factor;
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) * FieldElement(factor);
  return out;
}

SecantRelation classical_two_two_relation() {
  const FieldPtr qi = NumberField::make({Rational(1), Rational(0), Rational(1)});
  const FieldElement i = FieldElement::generator(qi);
  SecantRelation rel{qi, Partition({2, 2}), {}};
  rel.terms.push_back({FieldElement(1), xy_form(FieldElement(4), {{FieldElement(0), 2}}, 2)});
  rel.terms.push_back({FieldElement(1), xy_form(FieldElement(1), {{FieldElement(1), 2}, {FieldElement(-1), 2}}, 0)});
  rel.terms.push_back({FieldElement(-1), xy_form(FieldElement(1), {{i, 2}, {-i, 2}}, 0)});
  return rel;
}

FieldMatrix adjacent_cofactor_matrix(const FieldElement& p, const FieldElement& q, const FieldElement& r) {
  return columns_of({poly_mul(linear(p), linear(q)), poly_mul(linear(p), linear(r)), poly_mul(linear(q), linear(q)),
                     poly_mul(linear(r), linear(r))},
                    3);
}

FieldMatrix separated_cofactor_matrix(const FieldElement& p, const FieldElement& q, const FieldElement& r,
                                      const FieldElement& s) {
  return columns_of({poly_mul(linear(p), linear(r)), poly_mul(linear(q), linear(r)), poly_mul(linear(p), linear(s)),
                     poly_mul(linear(q), linear(s))},
                    3);
}

SecantRelation construct_adjacent_unit_jumps(int k, const FieldElement& p, const FieldElement& q,
                                             const FieldElement& r) {
  if (k < 1) throw std::invalid_argument("construct_adjacent_unit_jumps: k must be positive");
  if (p == q || p == r || q == r) throw DegenerateRoots("construct_adjacent_unit_jumps: roots must be distinct");
  const FieldVector c = single_null_vector(adjacent_cofactor_matrix(p, q, r), "construct_adjacent_unit_jumps");
  SecantRelation rel{field_of({&p, &q, &r}), Partition({k + 2, k + 1, k}), {}};
  const FieldElement one(1);
  rel.terms.push_back({c(0), xy_form(one, {{p, k + 2}, {q, k + 1}, {r, k}}, 0)});
  rel.terms.push_back({c(1), xy_form(one, {{p, k + 2}, {r, k + 1}, {q, k}}, 0)});
  rel.terms.push_back({c(2), xy_form(one, {{q, k + 2}, {p, k + 1}, {r, k}}, 0)});
  rel.terms.push_back({c(3), xy_form(one, {{r, k + 2}, {p, k + 1}, {q, k}}, 0)});
  return rel;
}

SecantRelation construct_separated_unit_jumps(int k1, int k2, const FieldElement& p, const FieldElement& q,
                                              const FieldElement& r, const FieldElement& s) {
  if (k2 < 1 || k1 < k2) throw std::invalid_argument("construct_separated_unit_jumps: need k1 >= k2 >= 1");
  const std::vector<const FieldElement*> pts{&p, &q, &r, &s};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (*pts[i] == *pts[j]) throw DegenerateRoots("construct_separated_unit_jumps: roots must be distinct");
    }
  }
  const FieldVector c = single_null_vector(separated_cofactor_matrix(p, q, r, s), "construct_separated_unit_jumps");
  SecantRelation rel{field_of({&p, &q, &r, &s}), Partition({k1 + 1, k1, k2 + 1, k2}), {}};
  const FieldElement one(1);
  rel.terms.push_back({c(0), xy_form(one, {{p, k1 + 1}, {q, k1}, {r, k2 + 1}, {s, k2}}, 0)});
  rel.terms.push_back({c(1), xy_form(one, {{q, k1 + 1}, {p, k1}, {r, k2 + 1}, {s, k2}}, 0)});
  rel.terms.push_back({c(2), xy_form(one, {{p, k1 + 1}, {q, k1}, {s, k2 + 1}, {r, k2}}, 0)});
  rel.terms.push_back({c(3), xy_form(one, {{q, k1 + 1}, {p, k1}, {s, k2 + 1}, {r, k2}}, 0)});
  return rel;
}

SecantRelation quartic_cubic_relation(const FieldPtr& field, const FieldElement& a, const FieldElement& b,
                                      const FieldElement& l1, const FieldElement& l2) {
  SecantRelation rel{field, Partition({4, 3}), {}};
  const FieldElement one(1);
  rel.terms.push_back({one, xy_form(one, {{FieldElement(-1), 4}}, 3)});
  rel.terms.push_back({-one, xy_form(one, {{FieldElement(0), 4}}, 3)});
  rel.terms.push_back({-l1, xy_form(one, {{-a, 3}}, 4)});
  rel.terms.push_back({-l2, xy_form(one, {{-b, 3}}, 4)});
  return rel;
}

QuarticCubicSolution solve_two_part_quartic_cubic() {
  QuarticCubicSolution sol;
  // (x+1)^4 - x^4 = 4x^3 + 6x^2 + 4x + 1, and
  // alpha (x+a)^3 + beta (x+b)^3 = sum_j C(3,j) x^{3-j} (alpha a^j + beta b^j).
  const std::vector<Rational> target{Rational(1), Rational(4), Rational(6), Rational(4)};  // constant first
  const std::vector<Rational> binom3{Rational(1), Rational(3), Rational(3), Rational(1)};
  for (int j = 0; j <= 3; ++j) sol.power_sums.push_back(target[static_cast<std::size_t>(3 - j)] / binom3[static_cast<std::size_t>(j)]);
  const auto& m = sol.power_sums;
  // a, b are the roots of z^2 - e1 z + e2, so m_{k+2} = e1 m_{k+1} - e2 m_k.
  const Rational det = m[1] * (-m[1]) - (-m[0]) * m[2];
  if (sgn(det) == 0) throw std::logic_error("quartic/cubic ansatz: singular power-sum system");
  sol.e1 = (m[2] * (-m[1]) - (-m[0]) * m[3]) / det;
  sol.e2 = (m[1] * m[3] - m[2] * m[2]) / det;

  const Rational disc = sol.e1 * sol.e1 - 4 * sol.e2;
  Integer root;
  const Integer pq = disc.get_num() * disc.get_den();
  const Integer d = squarefree_part(pq, &root);
  if (d == 1) throw std::logic_error("quartic/cubic ansatz: rational roots are not expected");
  const FieldPtr field = NumberField::quadratic(d);
  // sqrt(disc) = sqrt(pq) / q = root * sqrt(d) / q
  const FieldElement sqrt_disc = FieldElement::generator(field) * FieldElement(Rational(root, disc.get_den()));
  sol.a = (FieldElement(sol.e1) - sqrt_disc) / FieldElement(2);
  sol.b = (FieldElement(sol.e1) + sqrt_disc) / FieldElement(2);
  sol.beta = (FieldElement(m[1]) - FieldElement(m[0]) * sol.a) / (sol.b - sol.a);
  sol.alpha = FieldElement(m[0]) - sol.beta;
  sol.relation = quartic_cubic_relation(field, sol.a, sol.b, sol.alpha, sol.beta);
  return sol;
}

SecantRelation printed_quartic_cubic_relation() {
  const FieldPtr field = NumberField::quadratic(3);
  const FieldElement s3 = FieldElement::generator(field);
  const FieldElement a = FieldElement(3) - s3;
  const FieldElement b = FieldElement(3) + s3;
  const FieldElement l = (FieldElement(9) - FieldElement(5) * s3) / FieldElement(18);
  return quartic_cubic_relation(field, a, b, l, FieldElement(1) - l);
}

std::vector<FactoredForm> quintic_cubic_forms(const FieldElement& c) {
  auto f = [](const FieldElement& u) {
    return xy_form(FieldElement(1), {{-u.pow(5), 3}, {-u.pow(-3), 5}}, 0);
  };
  const FieldElement ci = c.inverse();
  return {f(c), f(-c), f(ci), f(-ci)};
}

namespace {

struct ResidualAttempt {
  bool zero = true;
  std::vector<std::string> moduli;
  std::vector<std::string> residual;
  std::optional<SecantRelation> relation;
};

void residual_modulo(const RationalPoly& modulus, ResidualAttempt& out) {
  const FieldPtr field = NumberField::make(modulus);
  try {
    const FieldElement c = FieldElement::generator(field);
    const auto forms = quintic_cubic_forms(c);
    SecantRelation rel{field, Partition({5, 3}), {}};
    const int signs[] = {1, 1, -1, -1};
    for (std::size_t i = 0; i < 4; ++i) rel.terms.push_back({FieldElement(signs[i]), forms[i]});
    const FieldVector res = rel.residual();
    out.moduli.push_back(rpoly::to_string(modulus));
    for (Eigen::Index k = 0; k < res.size(); ++k) out.residual.push_back(res(k).to_string());
    if (!is_zero_vector(res)) {
      out.zero = false;
    } else if (!out.relation) {
      out.relation = std::move(rel);
    }
  } catch (const ZeroDivisor& zd) {
    RationalPoly q, r;
    rpoly::divmod(rpoly::monic(modulus), zd.factor(), q, r);
    residual_modulo(zd.factor(), out);
    residual_modulo(q, out);
  }
}

}  // namespace

QuinticCubicOutcome verify_paper_53() {
  QuinticCubicOutcome out;
  {
    // c^4 = u with u = (1 + sqrt(-35))/6 must satisfy 3u^2 - u + 3 = 0.
    const FieldPtr k = NumberField::quadratic(-35);
    const FieldElement u = (FieldElement(1) + FieldElement::generator(k)) / FieldElement(6);
    out.min_poly_check = (FieldElement(3) * u * u - u + FieldElement(3)).is_zero();
  }
  const RationalPoly modulus{Rational(3), 0, 0, 0, Rational(-1), 0, 0, 0, Rational(3)};
  {
    const FieldPtr field = NumberField::make(modulus);
    const FieldElement c = FieldElement::generator(field);
    try {
      const auto fwd = quintic_cubic_forms(c);
      const auto inv = quintic_cubic_forms(c.inverse());
      out.symmetry_check = inv[0] == fwd[2] && inv[1] == fwd[3] && inv[2] == fwd[0] && inv[3] == fwd[1];
    } catch (const ZeroDivisor&) {
      out.symmetry_check = false;  // not decidable in the full quotient ring
    }
  }
  ResidualAttempt attempt;
  residual_modulo(modulus, attempt);
  out.residual_zero = attempt.zero;
  for (std::size_t i = 0; i < attempt.moduli.size(); ++i) out.modulus += (i ? " ; " : "") + attempt.moduli[i];
  out.residual = std::move(attempt.residual);
  if (attempt.zero && attempt.moduli.size() == 1) out.relation = std::move(attempt.relation);
  return out;
}

}  // namespace strata
