#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strata/relations/json_io.hpp"

namespace strata {

struct Certificate {
  std::string id;
  std::string provenance;
  SecantRelation relation;
};

class InvalidCertificate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Verified relations indexed by partition. Nothing enters the library
/// without passing verify_relation.
class CertificateLibrary {
 public:
  /// The exact relations shipped with the tool: the classical (2,2)
  /// relation, the solved (4,3) relation and the (5,3) relation.
  static CertificateLibrary builtin();

  /// Verifies and stores; throws InvalidCertificate with the diagnostic.
  void add(SecantRelation rel, std::string provenance, std::string id = {});
  void merge(const CertificateLibrary& other);

  const std::vector<Certificate>& certificates() const { return certs_; }
  bool empty() const { return certs_.empty(); }

  /// Shortest certificate whose partition is mu or a subpartition of mu.
  const Certificate* shortest_for(const Partition& mu) const;

  /// {"certificates": [{"id": s, "provenance": s, "relation": Relation}, ...]}
  Json to_json() const;
  /// Accepts the library object above, a bare array of such entries, or a
  /// single Relation object. Every relation is re-verified.
  static CertificateLibrary from_json(const Json& j);
  static CertificateLibrary load(const std::string& path);

 private:
  std::vector<Certificate> certs_;
};

}  // namespace strata
