#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "strata/relations/library.hpp"

namespace strata {

class Inconsistent : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SinglePart : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// min { l >= 3 : l (l - 2) > h }.
int certified_threshold(long h);
/// min { l : (l - 2)(l - 1) > h }, the strict form of the same bound.
int strict_threshold(long h);

struct LowerBound {
  int lower = 3;
  int paper_stated = 3;  // strict form, reported for comparison only
  int h = 0;
};

LowerBound lower_bound_index(const Partition& mu);
/// Same bound with h_bar(mu) in place of the minimal jump.
int lower_bound_closure(const Partition& mu);

struct UpperBound {
  int upper = 0;
  std::string rule;  // rule name, or the id of a library certificate
};

/// Minimum over the rules:
///   single-part      r = 1: exactly d + 2
///   last-part        mu_r + 2
///   step-pattern     (t+i, t^{i+1}) inside mu: i + 2
///   two-unit-jumps   two consecutive differences equal to 1: 4
///   parking          best parking-search bound
///   <certificate id> shortest verified relation for mu or a subpartition
UpperBound upper_bound_index(const Partition& mu, const CertificateLibrary* certs = nullptr);

struct BoundsBracket {
  int lower = 3;
  int upper = 0;
  std::string lower_cert;
  std::string upper_cert;
  int paper_stated_lower = 3;
};

/// Throws Inconsistent if lower > upper.
BoundsBracket bracket(const Partition& mu, const CertificateLibrary* certs = nullptr);

/// Largest m with (m - 1)^2 (r - 1) <= mu_r. Throws SinglePart for r = 1.
int common_radical_threshold(const Partition& mu);

}  // namespace strata
