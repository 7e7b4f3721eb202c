#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace detrees::verify {

enum class Verdict { Verified, Falsified, Inconclusive };

std::string to_string(Verdict v);

// Outcome of one claim. A falsified certificate carries a witness that can
// be re-checked on its own; an inconclusive one names the exhausted bound in
// `exhausted`.
struct Certificate {
  std::string claim;
  std::string instance_hash;
  Verdict verdict = Verdict::Verified;
  nlohmann::json witness;       // null unless falsified; the first failing part
  nlohmann::json part_witnesses = nlohmann::json::object();   // every failing part
  nlohmann::json bounds = nlohmann::json::object();
  std::string order;
  double elapsed_ms = 0;
  std::string exhausted;        // set when inconclusive
  nlohmann::json parts = nlohmann::json::object();
  nlohmann::json conventions = nlohmann::json::object();

  void falsify(const std::string& part, nlohmann::json w);
  void inconclusive(const std::string& part, const std::string& bound);
  nlohmann::json to_json(bool with_timing = true) const;
};

// Exit code contract: 0 all verified, 1 any falsified, 2 any inconclusive.
int exit_code(const std::vector<Certificate>& certs);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detrees::verify
