#include "strata/relations/library.hpp"

#include <fstream>

#include "strata/relations/constructions.hpp"

namespace strata {

CertificateLibrary CertificateLibrary::builtin() {
  CertificateLibrary lib;
  lib.add(classical_two_two_relation(), "4x^2y^2 + (x^2-y^2)^2 - (x^2+y^2)^2 = 0 over Q(i)", "classical-2-2");
  lib.add(solve_two_part_quartic_cubic().relation, "power-sum solution of (x+1)^4 - x^4 = 2(x+a)^3 + 2(x+b)^3",
          "quartic-cubic-4-3");
  if (auto outcome = verify_paper_53(); outcome.relation) {
    lib.add(std::move(*outcome.relation), "f(c)+f(-c)-f(1/c)-f(-1/c) = 0 in Q[z]/(3z^8-z^4+3)", "quintic-cubic-5-3");
  }
  return lib;
}

void CertificateLibrary::add(SecantRelation rel, std::string provenance, std::string id) {
  if (const Verdict v = verify_relation(rel); !v) {
    throw InvalidCertificate("certificate '" + id + "' for (" + rel.mu.to_string() + ") rejected: " + v.diagnostic);
  }
  if (id.empty()) id = "cert-" + std::to_string(certs_.size());
  certs_.push_back({std::move(id), std::move(provenance), std::move(rel)});
}

void CertificateLibrary::merge(const CertificateLibrary& other) {
  for (const auto& c : other.certs_) certs_.push_back(c);
}

const Certificate* CertificateLibrary::shortest_for(const Partition& mu) const {
  const Certificate* best = nullptr;
  for (const auto& c : certs_) {
    if (!is_subpartition(c.relation.mu, mu)) continue;
    if (!best || c.relation.length() < best->relation.length()) best = &c;
  }
  return best;
}

Json CertificateLibrary::to_json() const {
  Json arr = Json::array();
  for (const auto& c : certs_) {
    arr.push_back({{"id", c.id}, {"provenance", c.provenance}, {"relation", relation_to_json(c.relation)}});
  }
  return Json{{"certificates", arr}};
}

CertificateLibrary CertificateLibrary::from_json(const Json& j) {
  CertificateLibrary lib;
  if (j.is_object() && j.contains("terms")) {
    lib.add(relation_from_json(j), "single relation file");
    return lib;
  }
  const Json& arr = j.is_object() && j.contains("certificates") ? j.at("certificates") : j;
  if (!arr.is_array()) throw std::invalid_argument("certificate library: expected an array of certificates");
  for (const auto& entry : arr) {
    const Json& rel = entry.contains("relation") ? entry.at("relation") : entry;
    lib.add(relation_from_json(rel), entry.value("provenance", std::string{}), entry.value("id", std::string{}));
  }
  return lib;
}

CertificateLibrary CertificateLibrary::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open certificate file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("certificate file '" + path + "': " + e.what());
  }
  return from_json(j);
}

}  // namespace strata
