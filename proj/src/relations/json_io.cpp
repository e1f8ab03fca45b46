#include "strata/relations/json_io.hpp"

namespace strata {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("relation JSON: " + what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("expected a rational string");
}

Json field_to_json(const NumberField& k) {
  Json arr = Json::array();
  for (const auto& c : k.min_poly()) arr.push_back(rational_to_json(c));
  return Json{{"min_poly", arr}};
}

FieldPtr field_from_json(const Json& j) {
  const Json& mp = member(j, "min_poly");
  if (!mp.is_array()) bad("min_poly must be an array");
  RationalPoly poly;
  for (const auto& c : mp) poly.push_back(rational_from_json(c));
  const FieldPtr field = NumberField::make(std::move(poly));
  if (field->is_rationals()) return NumberField::rationals();
  return field;
}

Json element_to_json(const FieldElement& x, const NumberField& k) {
  Json arr = Json::array();
  for (const auto& c : x.coeffs_in(k)) arr.push_back(rational_to_json(c));
  return arr;
}

FieldElement element_from_json(const Json& j, const FieldPtr& k) {
  if (!j.is_array()) return FieldElement(rational_from_json(j));
  if (static_cast<int>(j.size()) > k->degree()) bad("field element has more coefficients than the field degree");
  RationalPoly poly;
  for (const auto& c : j) poly.push_back(rational_from_json(c));
  const FieldElement x(k, poly);
  return x.is_rational() ? FieldElement(x.rational_part()) : x;
}

Json form_to_json(const FactoredForm& f, const NumberField& k) {
  Json factors = Json::array();
  for (const auto& rf : f.factors()) {
    factors.push_back({{"alpha", element_to_json(rf.root.alpha(), k)},
                       {"beta", element_to_json(rf.root.beta(), k)},
                       {"mult", rf.mult}});
  }
  return Json{{"scalar", element_to_json(f.scalar(), k)}, {"factors", factors}};
}

FactoredForm form_from_json(const Json& j, const FieldPtr& k) {
  const FieldElement scalar = element_from_json(member(j, "scalar"), k);
  if (scalar.is_zero()) bad("form scalar must be nonzero");
  std::vector<RootFactor> factors;
  for (const auto& fj : member(j, "factors")) {
    const Json& mj = member(fj, "mult");
    if (!mj.is_number_integer() || mj.get<long>() <= 0) bad("multiplicity must be a positive integer");
    factors.push_back({ProjRoot(element_from_json(member(fj, "alpha"), k), element_from_json(member(fj, "beta"), k)),
                       mj.get<int>()});
  }
  return FactoredForm(scalar, std::move(factors));
}

Json partition_to_json(const Partition& mu) { return Json(mu.parts()); }

Json relation_to_json(const SecantRelation& rel) {
  Json terms = Json::array();
  for (const auto& t : rel.terms) {
    terms.push_back({{"coeff", element_to_json(t.coeff, *rel.field)}, {"form", form_to_json(t.form, *rel.field)}});
  }
  return Json{{"field", field_to_json(*rel.field)}, {"mu", partition_to_json(rel.mu)}, {"terms", terms}};
}

SecantRelation relation_from_json(const Json& j) {
  SecantRelation rel;
  rel.field = field_from_json(member(j, "field"));
  const Json& mu = member(j, "mu");
  if (!mu.is_array()) bad("mu must be an array");
  std::vector<int> parts;
  for (const auto& p : mu) {
    if (!p.is_number_integer()) bad("mu entries must be integers");
    parts.push_back(p.get<int>());
  }
  rel.mu = Partition(std::move(parts));
  for (const auto& tj : member(j, "terms")) {
    rel.terms.push_back({element_from_json(member(tj, "coeff"), rel.field), form_from_json(member(tj, "form"), rel.field)});
  }
  return rel;
}

}  // namespace strata
