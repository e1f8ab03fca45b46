#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "strata/numsearch/numsearch.hpp"
#include "strata/relations/json_io.hpp"

namespace strata {

/// What one command did. Emitted under "report" next to the outputs, so
/// that the inputs can be replayed.
struct Report {
  std::string command;
  Json inputs = Json::object();
  std::vector<std::string> certificates_used;
  std::vector<std::string> certificates_produced;
  double seconds = 0;

  Json to_json() const;
};

enum ExitCode { kExitOk = 0, kExitInvalidInput = 1, kExitInconsistent = 2 };

/// Runs one command line (without the program name). JSON or text goes to
/// `out`, diagnostics and usage to `err`. Returns 0 on success, 1 on invalid
/// input, 2 on an internal inconsistency.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

Json candidate_to_json(const Candidate& c);

}  // namespace strata
