#include <gtest/gtest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "strata/orbits/orbits.hpp"

namespace strata {
namespace {

FieldVector vec(std::initializer_list<FieldElement> cs) {
  FieldVector v(static_cast<Eigen::Index>(cs.size()));
  Eigen::Index i = 0;
  for (const auto& c : cs) v(i++) = c;
  return v;
}

std::vector<ProjRoot> random_roots(std::mt19937_64& rng, int n) {
  return affine_roots(oracle::distinct_rationals(rng, static_cast<std::size_t>(n), 12, 4));
}

Partition random_partition(std::mt19937_64& rng, int max_parts, int max_part) {
  std::uniform_int_distribution<int> len(1, max_parts), part(1, max_part);
  std::vector<int> parts(static_cast<std::size_t>(len(rng)));
  for (int& p : parts) p = part(rng);
  return Partition(parts);
}

TEST(OrbitMatrix, TwoOneAtZeroOne) {
  const OrbitMatrix om = orbit_matrix(Partition({2, 1}), affine_roots({0, 1}));
  ASSERT_EQ(om.rows(), 2);
  // x^2 (x - y) and x (x - y)^2.
  EXPECT_EQ(FieldVector(om.matrix.row(0).transpose()), vec({0, 0, -1, 1}));
  EXPECT_EQ(FieldVector(om.matrix.row(1).transpose()), vec({0, 1, -2, 1}));
  EXPECT_EQ(orbit_rank(om), 2);
}

TEST(OrbitMatrix, SizesAndRanks) {
  EXPECT_EQ(orbit_matrix(Partition({1, 1}), affine_roots({0, 1})).rows(), 1);
  EXPECT_EQ(orbit_rank(orbit_matrix(Partition({1, 1}), affine_roots({3, 7}))), 1);
  const OrbitMatrix om = orbit_matrix(Partition({2, 1, 1}), symmetric_integer_roots(3));
  EXPECT_EQ(om.rows(), 3);
  EXPECT_EQ(orbit_rank(om), 2);
}

TEST(OrbitMatrix, RejectsBadRoots) {
  EXPECT_THROW(orbit_matrix(Partition({2, 1}), affine_roots({1, 1})), DuplicateRoots);
  EXPECT_THROW(orbit_matrix(Partition({2, 1}), affine_roots({0, 1, 2})), DuplicateRoots);
  EXPECT_THROW(orbit_matrix(Partition({2, 1}), {ProjRoot::infinity(), ProjRoot(FieldElement(2), FieldElement(0))}),
               DuplicateRoots);
}

TEST(OrbitMatrix, RankBoundedByShape) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const Partition mu = random_partition(rng, 4, 4);
    const OrbitMatrix om = orbit_matrix(mu, random_roots(rng, mu.size()));
    ASSERT_EQ(static_cast<std::uint64_t>(om.rows()), arrangement_count(mu));
    ASSERT_LE(orbit_rank(om), std::min(om.rows(), mu.weight() + 1));
  }
}

TEST(OrbitMatrix, RankInvariantUnderMoebius) {
  std::mt19937_64 rng(52);
  const std::vector<Partition> mus{Partition({2, 2, 3}), Partition({1, 2, 3}), Partition({1, 2, 5}),
                                   Partition({3, 4, 6}), Partition({2, 1, 1})};
  for (int trial = 0; trial < 50; ++trial) {
    const Partition& mu = mus[static_cast<std::size_t>(trial) % mus.size()];
    const auto base = random_roots(rng, 3);
    FieldElement a, b, c, d;
    do {
      a = oracle::random_rational(rng);
      b = oracle::random_rational(rng);
      c = oracle::random_rational(rng);
      d = oracle::random_rational(rng);
    } while ((a * d - b * c).is_zero());
    std::vector<ProjRoot> moved;
    for (const auto& p : base) moved.push_back(mobius(p, a, b, c, d));
    ASSERT_EQ(orbit_rank(orbit_matrix(mu, base)), orbit_rank(orbit_matrix(mu, moved))) << mu.to_string();
  }
}

TEST(CommonRadical, TwoOneOne) {
  const auto rel = find_common_radical_relation(Partition({2, 1, 1}), symmetric_integer_roots(3), 3);
  ASSERT_TRUE(rel.has_value());
  EXPECT_EQ(rel->length(), 3);
  EXPECT_TRUE(verify_relation(*rel).ok);
  EXPECT_TRUE(has_common_radical(*rel));
  // Up to scale the coefficient on the double root at 0 is -2 times the others.
  std::vector<FieldElement> on_zero, others;
  for (const auto& t : rel->terms) {
    (t.form.multiplicity_of(ProjRoot::affine(0)) == 2 ? on_zero : others).push_back(t.coeff);
  }
  ASSERT_EQ(on_zero.size(), 1u);
  ASSERT_EQ(others.size(), 2u);
  EXPECT_EQ(others[0], others[1]);
  EXPECT_EQ(on_zero[0], FieldElement(-2) * others[0]);
}

TEST(CommonRadical, NoneAtFullRank) {
  EXPECT_FALSE(find_common_radical_relation(Partition({2, 1}), affine_roots({0, 1}), 3).has_value());
}

TEST(CommonRadical, ThreeTwoTwo) {
  const auto rel = find_common_radical_relation(Partition({3, 2, 2}), symmetric_integer_roots(3), 3);
  ASSERT_TRUE(rel.has_value());
  EXPECT_EQ(rel->length(), 3);
  EXPECT_TRUE(verify_relation(*rel).ok);
  EXPECT_TRUE(has_common_radical(*rel));
}

TEST(CommonRadical, ReturnedRelationsVerify) {
  std::mt19937_64 rng(53);
  int found = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Partition mu = random_partition(rng, 4, 3);
    if (mu.size() < 2) continue;
    const auto rel = find_common_radical_relation(mu, random_roots(rng, mu.size()), 6);
    if (!rel) continue;
    ++found;
    ASSERT_TRUE(verify_relation(*rel).ok);
    ASSERT_TRUE(has_common_radical(*rel));
    ASSERT_LE(rel->length(), 6);
  }
  EXPECT_GT(found, 5);
}

TEST(Classify, TwoParts) {
  const Classification c = classify_index(Partition({5, 3}));
  EXPECT_EQ(c.kind, IndexKind::Growing);
  EXPECT_EQ(c.rule, "two-part rule");
  EXPECT_EQ(classify_index(Partition({4})).kind, IndexKind::Growing);
}

TEST(Classify, ThreeTwoTwoStabilises) {
  const Classification c = classify_index(Partition({3, 2, 2}));
  EXPECT_EQ(c.kind, IndexKind::Stabilising);
  ASSERT_TRUE(c.certificate.has_value());
  EXPECT_EQ(c.certificate->length(), 3);
  EXPECT_TRUE(verify_relation(*c.certificate).ok);
  EXPECT_TRUE(has_common_radical(*c.certificate));
}

TEST(Classify, FiveTwoOneGrows) {
  const Classification c = classify_index(Partition({5, 2, 1}));
  EXPECT_EQ(c.kind, IndexKind::Growing);
  EXPECT_EQ(c.rule, "3-part Wronskian rule");
}

TEST(Classify, FactorialJumps) {
  // r = 3: every jump at least 36.
  const Classification c = classify_index(Partition({108, 72, 36}));
  EXPECT_EQ(c.kind, IndexKind::Growing);
  EXPECT_EQ(c.rule, "factorial-jump rule");
}

TEST(Classify, FourPartsCertificatesVerify) {
  for (const Partition& mu : {Partition({2, 1, 1, 1}), Partition({3, 2, 2, 1}), Partition({2, 2, 1, 1})}) {
    const Classification c = classify_index(mu);
    if (c.kind == IndexKind::Stabilising) {
      ASSERT_TRUE(c.certificate.has_value()) << mu.to_string();
      EXPECT_TRUE(verify_relation(*c.certificate).ok) << mu.to_string();
      EXPECT_TRUE(has_common_radical(*c.certificate)) << mu.to_string();
      EXPECT_EQ(c.certificate->mu, mu);
    } else {
      EXPECT_EQ(c.kind, IndexKind::Unknown) << mu.to_string();
      EXPECT_FALSE(c.report.configurations.empty());
    }
  }
}

TEST(Classify, Deterministic) {
  const Partition mu({4, 3, 3, 1});
  const Classification a = classify_index(mu), b = classify_index(mu);
  EXPECT_EQ(a.kind, b.kind);
  EXPECT_EQ(a.rule, b.rule);
  EXPECT_EQ(a.report.configurations, b.report.configurations);
}

TEST(StronglyStabilising, Examples) {
  EXPECT_TRUE(strongly_stabilising_3parts(2, 2, 3));
  EXPECT_TRUE(strongly_stabilising_3parts(1, 2, 3));
  EXPECT_FALSE(strongly_stabilising_3parts(1, 2, 5));
  EXPECT_FALSE(strongly_stabilising_3parts(2, 2, 2));
  // Argument order does not matter.
  EXPECT_EQ(strongly_stabilising_3parts(3, 2, 2), strongly_stabilising_3parts(2, 2, 3));
}

TEST(StronglyStabilising, AgreesWithOrbitRankDeficiency) {
  // Two independent detectors: Wronskian grid test and rank at concrete roots.
  std::mt19937_64 rng(54);
  for (int a = 1; a <= 6; ++a) {
    for (int b = a; b <= 6; ++b) {
      for (int c = b; c <= 6; ++c) {
        const Partition mu({a, b, c});
        bool deficient_everywhere = true;
        std::vector<std::vector<ProjRoot>> configs{symmetric_integer_roots(3), random_roots(rng, 3),
                                                   random_roots(rng, 3)};
        for (const auto& roots : configs) {
          const OrbitMatrix om = orbit_matrix(mu, roots);
          deficient_everywhere = deficient_everywhere && orbit_rank(om) < om.rows();
        }
        if (a == b && b == c) deficient_everywhere = false;  // a single form has no relation
        ASSERT_EQ(strongly_stabilising_3parts(a, b, c), deficient_everywhere) << mu.to_string();
      }
    }
  }
}

TEST(CountPermutations, Examples) {
  EXPECT_EQ(count_permutations_geq(Partition({3, 2, 2}), {2, 2, 2}), 3u);
  EXPECT_EQ(count_permutations_geq(Partition({3, 1}), {1, 1}), 2u);
  EXPECT_EQ(count_permutations_geq(Partition({4, 3, 3, 1}), {1, 1, 1, 1}), 12u);
  EXPECT_EQ(count_permutations_geq(Partition({3, 1}), {4, 1}), 0u);
  EXPECT_THROW(count_permutations_geq(Partition({3, 1}), {1}), std::invalid_argument);
}

TEST(CountPermutations, MatchesBruteForce) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const Partition mu = random_partition(rng, 6, 5);
    std::uniform_int_distribution<int> ad(1, mu.largest());
    std::vector<int> a(static_cast<std::size_t>(mu.size()));
    for (int& x : a) x = ad(rng);
    ASSERT_EQ(count_permutations_geq(mu, a), oracle::brute_count_geq(mu.parts(), a)) << mu.to_string();
  }
}

TEST(Parking, ConditionExamples) {
  EXPECT_TRUE(parking_condition(Partition({3, 2, 2}), {2, 2, 2}));
  EXPECT_FALSE(parking_condition(Partition({3, 1}), {1, 1}));
  for (int t = 1; t <= 5; ++t) {
    for (int i = 1; i <= 5; ++i) {
      std::vector<int> parts{t + i};
      parts.insert(parts.end(), static_cast<std::size_t>(i + 1), t);
      const Partition mu(parts);
      ASSERT_TRUE(parking_condition(mu, std::vector<int>(parts.size(), t)));
      ASSERT_EQ(count_permutations_geq(mu, std::vector<int>(parts.size(), t)), static_cast<std::uint64_t>(i + 2));
    }
  }
}

TEST(Parking, SearchExamples) {
  const auto p = parking_search(Partition({3, 2, 2}));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->a, (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(p->bound, 3);
  EXPECT_TRUE(p->complete);
  EXPECT_FALSE(parking_search(Partition({3, 1})).has_value());
}

TEST(Parking, SearchResultsSatisfyCondition) {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 100; ++trial) {
    const Partition mu = random_partition(rng, 6, 6);
    const auto p = parking_search(mu);
    if (!p) continue;
    ASSERT_TRUE(parking_condition(mu, p->a)) << mu.to_string();
    int sum = 0;
    for (int x : p->a) sum += x;
    ASSERT_EQ(p->bound, mu.weight() - sum + 2);
    ASSERT_EQ(p->count, count_permutations_geq(mu, p->a));
  }
}

TEST(Parking, ExhaustiveOptimumOnSmallPartitions) {
  // Oracle: every a in [1, mu_1]^r.
  for (int d = 2; d <= 7; ++d) {
    for (const Partition& mu : partitions_of(d)) {
      const int r = mu.size();
      int best = 1 << 30;
      std::vector<int> a(static_cast<std::size_t>(r), 1);
      while (true) {
        int sum = 0;
        for (int x : a) sum += x;
        if (sum <= d && oracle::brute_count_geq(mu.parts(), a) >= static_cast<std::uint64_t>(d - sum + 2)) {
          best = std::min(best, d - sum + 2);
        }
        int k = 0;
        while (k < r && a[static_cast<std::size_t>(k)] == mu.largest()) a[static_cast<std::size_t>(k++)] = 1;
        if (k == r) break;
        ++a[static_cast<std::size_t>(k)];
      }
      const auto p = parking_search(mu);
      if (best == 1 << 30) {
        EXPECT_FALSE(p.has_value()) << mu.to_string();
      } else {
        ASSERT_TRUE(p.has_value()) << mu.to_string();
        EXPECT_EQ(p->bound, best) << mu.to_string();
      }
    }
  }
}

TEST(Parking, ConsequenceAtRandomRoots) {
  std::mt19937_64 rng(57);
  for (const Partition& mu : {Partition({3, 2, 2}), Partition({4, 2, 2, 2}), Partition({2, 1, 1})}) {
    const auto p = parking_search(mu);
    ASSERT_TRUE(p.has_value());
    for (int trial = 0; trial < 5; ++trial) {
      const auto rel = find_common_radical_relation(mu, random_roots(rng, mu.size()), p->bound);
      ASSERT_TRUE(rel.has_value()) << mu.to_string();
      EXPECT_LE(rel->length(), p->bound);
    }
  }
}

}  // namespace
}  // namespace strata
