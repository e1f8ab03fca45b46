#include "strata/relations/relation.hpp"

#include <algorithm>

namespace strata {

FieldVector SecantRelation::residual() const {
  const int d = mu.weight();
  FieldVector acc = FieldVector::Constant(d + 1, FieldElement(0));
  for (const auto& term : terms) {
    const BinaryForm f = expand(term.form);
    if (f.degree != d) throw std::invalid_argument("relation term has the wrong degree");
    for (Eigen::Index k = 0; k <= d; ++k) {
      if (!f.coeffs(k).is_zero()) acc(k) += term.coeff * f.coeffs(k);
    }
  }
  return acc;
}

Verdict verify_relation(const SecantRelation& rel) {
  auto fail = [](std::string why) { return Verdict{false, std::move(why)}; };
  if (rel.terms.size() < 3) return fail("too few terms");
  for (std::size_t i = 0; i < rel.terms.size(); ++i) {
    const auto& t = rel.terms[i];
    if (t.coeff.is_zero()) return fail("zero coefficient on term " + std::to_string(i));
    if (t.form.degree() != rel.mu.weight() || t.form.multiplicity_profile() != rel.mu.parts()) {
      return fail("stratum membership: term " + std::to_string(i) + " is not in S_(" + rel.mu.to_string() + ")");
    }
  }
  for (std::size_t i = 0; i < rel.terms.size(); ++i) {
    for (std::size_t j = i + 1; j < rel.terms.size(); ++j) {
      if (rel.terms[i].form.same_roots(rel.terms[j].form)) {
        return fail("proportional terms " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
  try {
    if (!is_zero_vector(rel.residual())) return fail("nonzero sum");
  } catch (const FieldMismatch&) {
    return fail("field mismatch between terms");
  }
  return Verdict{true, {}};
}

bool has_common_radical(const SecantRelation& rel) {
  if (rel.terms.empty()) return true;
  const FactoredForm r0 = radical(rel.terms.front().form);
  return std::all_of(rel.terms.begin(), rel.terms.end(),
                     [&](const RelationTerm& t) { return radical(t.form).same_roots(r0); });
}

std::vector<FieldElement> fresh_integer_roots(const std::vector<FactoredForm>& forms, int count) {
  std::vector<FieldElement> out;
  for (long a = 0; static_cast<int>(out.size()) < count; ++a) {
    const ProjRoot cand = ProjRoot::affine(FieldElement(a));
    const bool used = std::any_of(forms.begin(), forms.end(), [&](const FactoredForm& f) {
      return f.multiplicity_of(cand) > 0;
    });
    if (!used) out.emplace_back(a);
  }
  return out;
}

namespace {

std::vector<FactoredForm> forms_of(const SecantRelation& rel) {
  std::vector<FactoredForm> out;
  out.reserve(rel.terms.size());
  for (const auto& t : rel.terms) out.push_back(t.form);
  return out;
}

}  // namespace

SecantRelation lift_subpartition(const SecantRelation& rel, const Partition& mu) {
  if (!is_subpartition(rel.mu, mu)) {
    throw NotSubpartition("(" + rel.mu.to_string() + ") is not a subpartition of (" + mu.to_string() + ")");
  }
  if (rel.mu == mu) return rel;
  const Partition extra = complement(mu, rel.mu);
  const auto points = fresh_integer_roots(forms_of(rel), extra.size());
  std::vector<RootFactor> factors;
  for (int j = 0; j < extra.size(); ++j) {
    factors.push_back({ProjRoot::affine(points[static_cast<std::size_t>(j)]), extra[j]});
  }
  const FactoredForm multiplier(FieldElement(1), std::move(factors));
  SecantRelation out{rel.field, mu, {}};
  for (const auto& t : rel.terms) out.terms.push_back({t.coeff, t.form * multiplier});
  return out;
}

SecantRelation lift_radical_power(const SecantRelation& rel, int i) {
  if (i <= 0) throw std::invalid_argument("lift_radical_power: exponent must be positive");
  const int r = rel.mu.size();
  const int len = rel.length();
  for (const auto& t : rel.terms) {
    if (t.form.root_count() != r) throw std::invalid_argument("lift_radical_power: a term does not have r distinct roots");
  }
  std::vector<RootFactor> g;
  for (const auto& t : rel.terms) {
    for (const auto& rf : t.form.factors()) {
      if (std::none_of(g.begin(), g.end(), [&](const RootFactor& o) { return o.root == rf.root; })) {
        g.push_back({rf.root, 1});
      }
    }
  }
  const int missing = r * len - static_cast<int>(g.size());
  if (missing < 0) throw std::logic_error("lift_radical_power: radical degree exceeds r * length");
  for (const auto& a : fresh_integer_roots(forms_of(rel), missing)) g.push_back({ProjRoot::affine(a), 1});
  for (auto& rf : g) rf.mult = i;
  const FactoredForm multiplier(FieldElement(1), std::move(g));

  std::vector<int> parts = rel.mu.parts();
  for (int& p : parts) p += i;
  parts.insert(parts.end(), static_cast<std::size_t>(r * (len - 1)), i);
  SecantRelation out{rel.field, Partition(std::move(parts)), {}};
  for (const auto& t : rel.terms) out.terms.push_back({t.coeff, t.form * multiplier});
  return out;
}

}  // namespace strata
