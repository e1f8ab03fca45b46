#pragma once

// JSON encodings:
//   Rational      "p/q" (or "p")
//   NumberField   {"min_poly": [Rational, ...]}        constant term first
//   FieldElement  [Rational, ...]                      length = field degree
//   FactoredForm  {"scalar": elt, "factors": [{"alpha": elt, "beta": elt, "mult": n}, ...]}
//   Relation      {"field": NumberField, "mu": [n, ...], "terms": [{"coeff": elt, "form": FactoredForm}, ...]}

#include <json.hpp>

#include "strata/relations/relation.hpp"

namespace strata {

using Json = nlohmann::json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json field_to_json(const NumberField& k);
FieldPtr field_from_json(const Json& j);

Json element_to_json(const FieldElement& x, const NumberField& k);
/// Accepts an array of Rationals or, as a shorthand, a single Rational.
FieldElement element_from_json(const Json& j, const FieldPtr& k);

Json form_to_json(const FactoredForm& f, const NumberField& k);
FactoredForm form_from_json(const Json& j, const FieldPtr& k);

Json relation_to_json(const SecantRelation& rel);
SecantRelation relation_from_json(const Json& j);

Json partition_to_json(const Partition& mu);

}  // namespace strata
