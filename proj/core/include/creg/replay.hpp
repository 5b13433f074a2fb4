#pragma once

// Re-checks classification reports from their witness payloads alone. The
// checks here share no code with the searches that produced the reports:
// the reference code, Krawtchouk values, design counts and group closures are
// all recomputed locally.

#include <string>
#include <vector>

#include "creg/certificate.hpp"

namespace creg {

struct ReplayOutcome {
  std::string anchor;
  /// Verdict recomputed from the witness equals the recorded one.
  bool reproduced = false;
  Verdict recorded = Verdict::fail;
  std::string message;
};

struct ReplayReport {
  bool schema_ok = false;
  std::vector<ReplayOutcome> steps;

  bool all_reproduced() const;
  /// Every step reproduced and every recorded verdict is PASS.
  bool all_pass() const;
};

ReplayOutcome replay_certificate(const Json& certificate);
ReplayReport replay_report(const Json& report);

}  // namespace creg
