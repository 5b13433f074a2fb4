#pragma once

// Claim / witness / verdict records. A witness carries enough data to
// re-check the claim without repeating the search that produced it.

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace creg {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail };

std::string to_string(Verdict verdict);
Verdict verdict_from_string(const std::string& text);

struct Certificate {
  std::string claim;
  /// Stable identifier of the proof obligation, e.g. "classification.step2.block-count".
  std::string anchor;
  Json witness;
  Verdict verdict = Verdict::fail;

  bool passed() const { return verdict == Verdict::pass; }
};

Json to_json(const Certificate& certificate);
Certificate certificate_from_json(const Json& j);

/// An input violated a documented precondition; the witness shows where.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, Json witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const Json& witness() const { return witness_; }

 private:
  Json witness_;
};

/// A computation contradicted a fact it was meant to certify.
class ContradictionError : public std::runtime_error {
 public:
  ContradictionError(const std::string& what, Json witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const Json& witness() const { return witness_; }

 private:
  Json witness_;
};

}  // namespace creg
