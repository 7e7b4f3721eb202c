#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "detrees/app/spec.hpp"
#include "detrees/relations.hpp"
#include "detrees/verify/maps.hpp"
#include "detrees/verify/oracle.hpp"

namespace detrees::app {

inline constexpr const char* kVersion = "0.1.0";

// Output of one command. `json` is deterministic for a fixed spec and seed
// apart from elapsed_ms fields; `files` maps file names to contents for --out.
struct Report {
  nlohmann::json json;
  std::string text;
  std::map<std::string, std::string> files;
  int exit_code = 0;
};

// which: gens, en, plucker-initial, plucker-lifted, exchange-h, all.
Report cmd_generate(const ProblemSpec& spec, const std::string& which);

struct VerifyOptions {
  // fiber-gb, rees-gb, sagbi, minors-gb, l-exchange, all, or one member such
  // as fiber-gb/lifted.
  std::string claim = "all";
  std::optional<std::uint64_t> seed;
  std::size_t probes = 5;
  // Replaces the family of a single Groebner claim; one polynomial per line.
  std::optional<std::string> claimed_text;
};

Report cmd_verify(const ProblemSpec& spec, const VerifyOptions& opts);

// Without a spec the shape and r are read off the tableau.
Report cmd_standardize(const std::string& tableau_text, const std::optional<ProblemSpec>& spec);

struct OracleRequest {
  verify::MapKind map = verify::MapKind::Initial;
  rel::Ambient ambient = rel::Ambient::Fiber;
  verify::FiberMethod method = verify::FiberMethod::Elimination;
};

Report cmd_oracle(const ProblemSpec& spec, const OracleRequest& req);

// Exit codes for errors: 3 malformed input, 4 refused or violated
// precondition, 5 anything else.
int error_exit_code(const std::exception& e);

}  // namespace detrees::app
