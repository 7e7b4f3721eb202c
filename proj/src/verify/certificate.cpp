#include "detrees/verify/certificate.hpp"

namespace detrees::verify {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified:
      return "verified";
    case Verdict::Falsified:
      return "falsified";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return {};
}

void Certificate::falsify(const std::string& part, nlohmann::json w) {
  parts[part] = "falsified";
  w["part"] = part;
  part_witnesses[part] = w;
  if (verdict == Verdict::Falsified) return;
  verdict = Verdict::Falsified;
  witness = std::move(w);
}

void Certificate::inconclusive(const std::string& part, const std::string& bound) {
  parts[part] = "inconclusive";
  if (verdict != Verdict::Verified) return;
  verdict = Verdict::Inconclusive;
  exhausted = bound;
}

nlohmann::json Certificate::to_json(bool with_timing) const {
  nlohmann::json j;
  j["claim"] = claim;
  j["instance_hash"] = instance_hash;
  j["verdict"] = to_string(verdict);
  if (!witness.is_null()) j["witness"] = witness;
  if (part_witnesses.size() > 1) j["witnesses"] = part_witnesses;
  j["bounds"] = bounds;
  if (!exhausted.empty()) j["bounds"]["exhausted"] = exhausted;
  j["order"] = order;
  if (!parts.empty()) j["parts"] = parts;
  if (!conventions.empty()) j["conventions"] = conventions;
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

int exit_code(const std::vector<Certificate>& certs) {
  bool inconclusive = false;
  for (const Certificate& c : certs) {
    if (c.verdict == Verdict::Falsified) return 1;
    if (c.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

}  // namespace detrees::verify
