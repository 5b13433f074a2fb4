#pragma once

// The uniqueness argument for completely regular codes with (m, delta) equal
// to (12, 6) or (11, 5), replayed as an ordered chain of certificates, plus
// the final complete-transitivity certificate for the reference code.

#include <cstdint>
#include <optional>
#include <vector>

#include "creg/certificate.hpp"
#include "creg/code.hpp"
#include "creg/symmetry.hpp"

namespace creg {

inline constexpr const char* kReportSchema = "creg-cert/1";

struct ClassifyOptions {
  int threads = 1;
  std::size_t element_budget = kDefaultElementBudget;
  std::uint64_t node_budget = 200'000'000;
};

bool classification_supported(int m, int delta);

/// Integrality of lambda_i for every candidate lambda up to the counting
/// bound (m - t) / (delta - t); passes when exactly one candidate survives.
Certificate lambda_bounds(int m, int delta, int t);

/// The distribution a_0 = 1, a_5 = a_6 = 11 at length 11 has a'_2 = -55 < 0,
/// so no code of size 23 realizes it. Passes when a negative entry is found.
Certificate reject_size_23();

/// The Hadamard 12 code, or its puncture at coordinate 1 when m = 11.
Code reference_code(int m);

struct ClassificationRun {
  int m = 0;
  int delta = 0;
  std::int64_t size_bound = 0;
  std::vector<Certificate> steps;
  /// 1-based images of sigma mapping the classified code onto the reference.
  std::optional<std::vector<int>> sigma;

  bool passed() const;
};

/// Runs the steps in order and stops at the first failing certificate.
/// ParameterError for unsupported (m, delta).
ClassificationRun classify(int m, int delta, std::int64_t size_bound, const ClassifyOptions& options = {});

/// classify, then on success certify_theorem appended as the final step.
ClassificationRun classify_and_certify(int m, int delta, std::int64_t size_bound,
                                       const ClassifyOptions& options = {});

/// Complete regularity, the automorphism group and complete transitivity of
/// the reference code, and transitivity carried over to a conjugate code.
Certificate certify_theorem(int m, int delta, const ClassifyOptions& options = {});

/// Schema-tagged report. The runtime field is omitted when not given, which
/// makes reports byte-identical across runs.
Json report_json(const ClassificationRun& run, std::optional<double> runtime_ms = std::nullopt);

}  // namespace creg
