#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strata/relations/relation.hpp"

namespace strata {

class DuplicateRoots : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All distinct assignments of the multiplicities of mu to a fixed set of r
/// roots, expanded. Row i is the coefficient vector of
/// prod_j (beta_j x - alpha_j y)^{arrangements[i][j]}.
struct OrbitMatrix {
  Partition mu;
  std::vector<ProjRoot> roots;
  std::vector<std::vector<int>> arrangements;  // decreasing lexicographic order
  FieldMatrix matrix;                          // N x (d+1)
  FieldPtr field;                              // field of the roots (Q if all rational)

  int rows() const { return static_cast<int>(arrangements.size()); }
  FactoredForm form(int i) const;
};

/// Throws DuplicateRoots unless the roots are pairwise distinct and there
/// are exactly mu.size() of them.
OrbitMatrix orbit_matrix(const Partition& mu, const std::vector<ProjRoot>& roots);
int orbit_rank(const OrbitMatrix& om);

/// Affine roots from rationals.
std::vector<ProjRoot> affine_roots(const std::vector<Rational>& values);
/// 0, 1, -1, 2, -2, ... (the first n).
std::vector<ProjRoot> symmetric_integer_roots(int n);

inline constexpr std::uint64_t kDefaultSubsetBudget = 200000;

/// A minimal dependent set of orbit rows of size at most max_len, as a
/// verified common-radical relation. Subsets are enumerated by increasing
/// size in canonical order, with every proper prefix independent. When the
/// subset budget runs out, the first circuit in row order is used instead
/// (it is minimal, but not necessarily shortest).
std::optional<SecantRelation> find_common_radical_relation(const OrbitMatrix& om, int max_len,
                                                           std::uint64_t budget = kDefaultSubsetBudget);
std::optional<SecantRelation> find_common_radical_relation(const Partition& mu, const std::vector<ProjRoot>& roots,
                                                           int max_len,
                                                           std::uint64_t budget = kDefaultSubsetBudget);

enum class IndexKind { Growing, Stabilising, Unknown };
std::string to_string(IndexKind k);

struct ClassifyBudget {
  int random_configurations = 16;
  std::uint64_t seed = 1;
  std::uint64_t subset_budget = kDefaultSubsetBudget;
};

/// What the orbit search saw when no certificate was found.
struct SearchReport {
  int orbit_size = 0;
  int ambient_dim = 0;
  std::vector<std::string> configurations;  // root sets tried, in order
  int min_rank = 0;
  std::string full_rank_witness;            // a root set with rank = orbit_size
};

struct Classification {
  IndexKind kind = IndexKind::Unknown;
  std::string rule;                         // rule for Growing, root set for Stabilising
  std::optional<SecantRelation> certificate;
  SearchReport report;
};

/// Growing via the two-part, factorial-jump or 3-part Wronskian rule;
/// Stabilising with a verified common-radical certificate; Unknown otherwise.
Classification classify_index(const Partition& mu, const ClassifyBudget& budget = {});

/// Whether the Wronskian in t of the distinct permutations of
/// (t-x1)^a (t-x2)^b (t-x3)^c vanishes identically in (t, x1, x2, x3).
/// Decided by exact evaluation on a grid larger than the degree bound.
bool strongly_stabilising_3parts(int a, int b, int c);

/// Number of distinct orderings pi of the parts of mu with pi_i >= a_i.
std::uint64_t count_permutations_geq(const Partition& mu, const std::vector<int>& a);
/// count_permutations_geq(mu, a) >= |mu| - sum(a) + 2.
bool parking_condition(const Partition& mu, const std::vector<int>& a);

struct ParkingResult {
  std::vector<int> a;
  int bound = 0;  // |mu| - sum(a) + 2
  std::uint64_t count = 0;
  std::string schedule;  // "exhaustive" or "small-jumps"
  bool complete = true;  // false when the search budget ran out
};

inline constexpr std::uint64_t kDefaultParkingBudget = 200000;

/// Smallest parking bound over 1 <= a_i <= mu_1 with sum(a) <= |mu|; among
/// equal bounds the lexicographically smallest a. Also tries the
/// small-jumps schedule.
std::optional<ParkingResult> parking_search(const Partition& mu, std::uint64_t budget = kDefaultParkingBudget);

/// One row of evidence on whether parking failure forces a full-rank orbit.
struct ParkingEvidence {
  Partition mu;
  std::optional<ParkingResult> parking;
  int orbit_size = 0;
  int orbit_rank = 0;  // at roots 0, 1, -1, 2, ...
  bool deficient() const { return orbit_rank < orbit_size; }
};

ParkingEvidence parking_evidence(const Partition& mu);

}  // namespace strata
