#include "creg/certificate.hpp"

namespace creg {

std::string to_string(Verdict verdict) { return verdict == Verdict::pass ? "PASS" : "FAIL"; }

Verdict verdict_from_string(const std::string& text) {
  if (text == "PASS") return Verdict::pass;
  if (text == "FAIL") return Verdict::fail;
  throw std::invalid_argument("unknown verdict '" + text + "'");
}

Json to_json(const Certificate& certificate) {
  Json j;
  j["claim"] = certificate.claim;
  j["anchor"] = certificate.anchor;
  j["witness"] = certificate.witness;
  j["verdict"] = to_string(certificate.verdict);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.claim = j.at("claim").get<std::string>();
  c.anchor = j.at("anchor").get<std::string>();
  c.witness = j.at("witness");
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  return c;
}

}  // namespace creg
