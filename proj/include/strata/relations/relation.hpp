#pragma once

#include <string>
#include <vector>

#include "strata/forms/forms.hpp"
#include "strata/partitions/partition.hpp"

namespace strata {

struct RelationTerm {
  FieldElement coeff;
  FactoredForm form;
};

/// sum coeff_i * form_i = 0 with pairwise non-proportional forms in S_mu.
struct SecantRelation {
  FieldPtr field = NumberField::rationals();
  Partition mu;
  std::vector<RelationTerm> terms;

  int length() const { return static_cast<int>(terms.size()); }
  /// sum coeff_i * expand(form_i), exactly.
  FieldVector residual() const;
};

struct Verdict {
  bool ok = false;
  std::string diagnostic;  // names the first failed check; empty when ok
  explicit operator bool() const { return ok; }
};

/// Checks, in order: at least three terms; nonzero coefficients; every form
/// of degree |mu| with multiplicity profile mu ("stratum membership");
/// pairwise non-proportional forms ("proportional terms"); exact zero sum
/// ("nonzero sum").
Verdict verify_relation(const SecantRelation& rel);

/// True when all forms share one radical.
bool has_common_radical(const SecantRelation& rel);

class NotSubpartition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lifts a relation for nu to one for mu by multiplying every term by
/// prod (x - a_j y)^{mu_hat_j} over mu_hat = mu \ nu, where the a_j are the
/// smallest nonnegative integers not already used as roots.
SecantRelation lift_subpartition(const SecantRelation& rel, const Partition& mu);

/// Multiplies every term by (g')^i, where g' is the radical of the product
/// of all terms extended by fresh integer roots to degree r * length. The
/// result is a relation for (mu_1+i, ..., mu_r+i, i^{r(length-1)}).
/// Requires every term to have exactly r distinct roots.
SecantRelation lift_radical_power(const SecantRelation& rel, int i);

/// Smallest nonnegative integers that are not affine roots of any form in
/// `forms`.
std::vector<FieldElement> fresh_integer_roots(const std::vector<FactoredForm>& forms, int count);

}  // namespace strata
