#include <gtest/gtest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "strata/forms/forms.hpp"

namespace strata {
namespace {

FieldPoly poly(std::initializer_list<FieldElement> cs) {
  FieldPoly p(static_cast<Eigen::Index>(cs.size()));
  Eigen::Index i = 0;
  for (const auto& c : cs) p(i++) = c;
  return p;
}

FieldVector vec(std::initializer_list<FieldElement> cs) { return poly(cs); }

FactoredForm form(std::initializer_list<std::pair<FieldElement, int>> roots, FieldElement scalar = 1) {
  std::vector<RootFactor> fs;
  for (const auto& [a, m] : roots) fs.push_back({ProjRoot::affine(a), m});
  return FactoredForm(std::move(scalar), std::move(fs));
}

FactoredForm random_form(std::mt19937_64& rng, int max_roots = 3, int max_mult = 3) {
  std::uniform_int_distribution<int> count(0, max_roots), mult(1, max_mult);
  const auto values = oracle::distinct_rationals(rng, static_cast<std::size_t>(count(rng)) + 1);
  std::vector<RootFactor> fs;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) fs.push_back({ProjRoot::affine(values[i]), mult(rng)});
  if (rng() % 4 == 0) fs.push_back({ProjRoot::infinity(), mult(rng)});
  return FactoredForm(FieldElement(oracle::random_rational(rng) + 10), std::move(fs));
}

TEST(ProjRoot, Canonical) {
  const ProjRoot p(FieldElement(2), FieldElement(4));
  EXPECT_EQ(p, ProjRoot::affine(Rational(1, 2)));
  EXPECT_EQ(ProjRoot(FieldElement(5), FieldElement(0)), ProjRoot::infinity());
  EXPECT_THROW(ProjRoot(FieldElement(0), FieldElement(0)), std::invalid_argument);
}

TEST(Expand, SquareOfDifference) {
  const BinaryForm f = expand(form({{1, 2}}));
  EXPECT_EQ(f.degree, 2);
  EXPECT_EQ(f.coeffs, vec({1, -2, 1}));
}

TEST(Expand, MonomialWithRootAtInfinity) {
  const FactoredForm f(1, {{ProjRoot::affine(0), 2}, {ProjRoot::infinity(), 2}});
  EXPECT_EQ(expand(f).coeffs, vec({0, 0, 1, 0, 0}));
}

TEST(Expand, CubeOverQuadraticField) {
  // (x + a y)^3 with a = (3 - sqrt 3)/6, against the binomial theorem.
  const FieldPtr k = NumberField::quadratic(3);
  const FieldElement a = (FieldElement(3) - FieldElement::generator(k)) / FieldElement(6);
  const BinaryForm f = expand(FactoredForm(1, {{ProjRoot::affine(-a), 3}}));
  ASSERT_EQ(f.coeffs.size(), 4);
  for (int j = 0; j <= 3; ++j) {
    const FieldElement expected = FieldElement(Rational(oracle::binomial(3, static_cast<unsigned long>(j)))) * a.pow(3 - j);
    EXPECT_EQ(f.coeffs(j), expected) << "x^" << j;
  }
}

TEST(Expand, Multiplicative) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const FactoredForm f = random_form(rng), g = random_form(rng);
    ASSERT_EQ(expand(f * g).coeffs, multiply(expand(f), expand(g)).coeffs);
  }
}

TEST(Radical, Examples) {
  const FactoredForm f(1, {{ProjRoot::affine(0), 3}, {ProjRoot::infinity(), 2}});
  const FactoredForm r = radical(f);
  EXPECT_EQ(r.degree(), 2);
  EXPECT_EQ(r.multiplicity_profile(), (std::vector<int>{1, 1}));
  EXPECT_TRUE(r.same_roots(FactoredForm(1, {{ProjRoot::affine(0), 1}, {ProjRoot::infinity(), 1}})));

  const FactoredForm sq = form({{1, 1}, {2, 1}}, 5);
  EXPECT_TRUE(radical(sq).same_roots(sq));
  EXPECT_TRUE(radical(sq).scalar().is_one());
}

TEST(Radical, ClassicalProductHasSixRoots) {
  const FieldPtr k = NumberField::quadratic(-1);
  const FieldElement i = FieldElement::generator(k);
  const FactoredForm f1(4, {{ProjRoot::affine(0), 2}, {ProjRoot::infinity(), 2}});
  const FactoredForm f2 = form({{1, 2}, {-1, 2}});
  const FactoredForm f3 = form({{i, 2}, {-i, 2}});
  const FactoredForm r = radical(f1 * f2 * f3);
  EXPECT_EQ(r.degree(), 6);
  for (const ProjRoot& p : {ProjRoot::affine(0), ProjRoot::infinity(), ProjRoot::affine(1), ProjRoot::affine(-1),
                            ProjRoot::affine(i), ProjRoot::affine(-i)}) {
    EXPECT_EQ(r.multiplicity_of(p), 1) << p.to_string();
  }
  EXPECT_EQ(gcd_forms(std::vector<FactoredForm>{f1, f2, f3}).degree(), 0);
}

TEST(Radical, DividesAndIsIdempotent) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const FactoredForm f = random_form(rng);
    ASSERT_TRUE(divides(radical(f), f));
    ASSERT_TRUE(radical(radical(f)) == radical(f));
  }
}

TEST(Gcd, Examples) {
  const ProjRoot x0 = ProjRoot::affine(0), inf = ProjRoot::infinity();
  const FactoredForm a(1, {{x0, 2}, {inf, 1}}), b(1, {{x0, 1}, {inf, 2}});
  const FactoredForm g = gcd_forms(std::vector<FactoredForm>{a, b});
  EXPECT_TRUE(g.same_roots(FactoredForm(1, {{x0, 1}, {inf, 1}})));
  EXPECT_EQ(gcd_forms(std::vector<FactoredForm>{form({{1, 2}}), form({{2, 3}})}).degree(), 0);
}

TEST(Gcd, DividesEveryMemberAndQuotientsAreCoprime) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    // Forms sharing a random common factor.
    const FactoredForm common = random_form(rng, 2, 2);
    std::vector<FactoredForm> fs;
    for (int i = 0; i < 3; ++i) fs.push_back(common * random_form(rng, 2, 2));
    const FactoredForm g = gcd_forms(fs);
    std::vector<FactoredForm> reduced;
    for (const auto& f : fs) {
      ASSERT_TRUE(divides(g, f));
      reduced.push_back(quotient(f, g));
    }
    ASSERT_EQ(gcd_forms(reduced).degree(), 0);
    ASSERT_GE(g.degree(), radical(common).degree() > 0 ? 1 : 0);
  }
}

TEST(Quotient, RejectsNonDivisor) { EXPECT_THROW(quotient(form({{1, 1}}), form({{2, 1}})), std::invalid_argument); }

TEST(Wronskian, Examples) {
  const std::vector<FieldPoly> one_t{poly({1}), poly({0, 1})};
  EXPECT_EQ(poly_trim(wronskian(one_t)), poly({1}));
  const std::vector<FieldPoly> t_t2{poly({0, 1}), poly({0, 0, 1})};
  EXPECT_EQ(poly_trim(wronskian(t_t2)), poly({0, 0, 1}));
  const std::vector<FieldPoly> independent{poly({1, 2}), poly({0, 1, 1}), poly({3, 5, 1})};
  const std::vector<FieldPoly> dependent{poly({1, 2}), poly({0, 1, 1}), poly({2, 5, 1})};  // 2 f1 + f2
  EXPECT_EQ(poly_trim(wronskian(dependent)).size(), 0);
  EXPECT_NE(poly_trim(wronskian(independent)).size(), 0);
}

FieldPoly random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  const int d = deg(rng);
  FieldPoly p(d + 1);
  for (int i = 0; i <= d; ++i) p(i) = FieldElement(oracle::random_rational(rng, 4, 2));
  return p;
}

Matrix<FieldElement> coefficient_matrix(const std::vector<FieldPoly>& fs, int max_deg) {
  Matrix<FieldElement> m = Matrix<FieldElement>::Constant(max_deg + 1, static_cast<Eigen::Index>(fs.size()), 0);
  for (std::size_t j = 0; j < fs.size(); ++j) {
    for (Eigen::Index i = 0; i < fs[j].size(); ++i) m(i, static_cast<Eigen::Index>(j)) = fs[j](i);
  }
  return m;
}

TEST(Wronskian, VanishesExactlyOnDependentLists) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> count(1, 4);
  int dependent_seen = 0, independent_seen = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<FieldPoly> fs;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) fs.push_back(random_poly(rng, 6));
    if (trial % 2 == 0 && k >= 2) {
      // Force a dependence: last = sum of random multiples of the others.
      FieldPoly comb = FieldPoly::Constant(7, 0);
      for (int i = 0; i + 1 < k; ++i) {
        const FieldElement c(oracle::random_rational(rng, 3, 2));
        for (Eigen::Index j = 0; j < fs[static_cast<std::size_t>(i)].size(); ++j) comb(j) += c * fs[static_cast<std::size_t>(i)](j);
      }
      fs.back() = comb;
    }
    const bool w_zero = poly_trim(wronskian(fs)).size() == 0;
    const bool dependent = !exact_nullspace(coefficient_matrix(fs, 6)).empty();
    ASSERT_EQ(w_zero, dependent) << "trial " << trial;
    (dependent ? dependent_seen : independent_seen)++;
  }
  EXPECT_GT(dependent_seen, 20);
  EXPECT_GT(independent_seen, 20);
}

TEST(Wronskian, SwapChangesSign) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<FieldPoly> fs{random_poly(rng, 5), random_poly(rng, 5), random_poly(rng, 5)};
    const FieldPoly w = poly_trim(wronskian(fs));
    std::swap(fs[0], fs[2]);
    const FieldPoly w_swapped = poly_trim(wronskian(fs));
    ASSERT_EQ(w_swapped, poly_trim(FieldPoly(-w)));
  }
}

TEST(Mobius, MapsRoots) {
  // t -> 1/t swaps 0 and infinity.
  EXPECT_EQ(mobius(ProjRoot::affine(0), 0, 1, 1, 0), ProjRoot::infinity());
  EXPECT_EQ(mobius(ProjRoot::infinity(), 0, 1, 1, 0), ProjRoot::affine(0));
  EXPECT_EQ(mobius(ProjRoot::affine(2), 0, 1, 1, 0), ProjRoot::affine(Rational(1, 2)));
}

}  // namespace
}  // namespace strata
