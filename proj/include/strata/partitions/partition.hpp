#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

/// An integer partition mu_1 >= ... >= mu_r > 0. Parts given in any order
/// are sorted on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }  // r
  int weight() const;                                           // d = |mu|
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  int largest() const { return parts_.front(); }
  int smallest() const { return parts_.back(); }

  /// Distinct part values in decreasing order with their multiplicities.
  std::vector<std::pair<int, int>> value_counts() const;

  /// "3,2,2,2,2"
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
};

/// "5,3" or with exponents "3,2^4" = (3,2,2,2,2).
Partition parse_partition(std::string_view text);

struct JumpData {
  std::vector<int> jumps;  // positive values among mu_i - mu_{i+1} and mu_r
  int h = 0;               // the minimal jump
};

JumpData jump_data(const Partition& mu);

class TooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kHBarMaxParts = 24;

/// Minimum nonzero |sum_A mu_k - sum_B mu_l| over disjoint index sets A, B,
/// by meet-in-the-middle over {-1, 0, +1} sign assignments. Throws TooLarge
/// for more than kHBarMaxParts parts.
int h_bar(const Partition& mu);

/// Minimum of the minimal jump over all coarsenings of mu (enumerates set
/// partitions of the parts; intended for cross-checks on small mu).
int h_bar_coarsening(const Partition& mu);

/// True iff the parts of `fine` can be grouped so that the group sums are
/// exactly the parts of `coarse`.
bool is_coarsening(const Partition& coarse, const Partition& fine);

/// Every part increased by t.
Partition shift(const Partition& mu, int t);

/// nu is a sub-multiset of mu.
bool is_subpartition(const Partition& nu, const Partition& mu);
/// mu minus nu as multisets; throws std::invalid_argument unless nu is a subpartition.
Partition complement(const Partition& mu, const Partition& nu);

/// Distinct nonempty subpartitions, larger ones first (mu itself first).
std::vector<Partition> subpartitions(const Partition& mu);

/// r! / prod m_j! where m_j are the multiplicities of the distinct parts.
std::uint64_t arrangement_count(const Partition& mu);

/// All distinct orderings of the parts, in decreasing lexicographic order
/// (the first one is mu itself).
std::vector<std::vector<int>> arrangements(const Partition& mu);

/// All partitions of d, in reverse lexicographic order.
std::vector<Partition> partitions_of(int d);

}  // namespace strata
