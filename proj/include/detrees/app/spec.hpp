#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "detrees/instance.hpp"

namespace detrees::app {

struct Bounds {
  int degree = 4;
  int gamma = 2;
  std::size_t cap = 30;
};

// A problem instance as read from a JSON spec file:
//   {"schema": 1, "n": 3, "m": 8, "r": 3,
//    "ideal": {"type": "ladder", "rows": [[1,5],[3,7],[4,8]]},
//    "field": "rational" | {"prime": 32003},
//    "bounds": {"degree": 4, "gamma": 2, "cap": 30}}
// "shape": {"n", "m"} may replace the top-level n and m. Ideal types are
// "generic", "ladder" (rows) and "unit_interval" (intervals).
struct ProblemSpec {
  det::MatrixShape shape;
  int r = 1;
  IdealSpec ideal;
  poly::Field field = poly::Field::rational();
  Bounds bounds;
};

// Throws ParseError naming the offending field.
ProblemSpec parse_spec(const nlohmann::json& j);
ProblemSpec parse_spec_text(const std::string& text);
ProblemSpec load_spec(const std::string& path);

nlohmann::json to_json(const ProblemSpec& spec);
Instance make_instance(const ProblemSpec& spec);

// Default seed for randomized probes: the instance hash read as an integer.
std::uint64_t default_seed(const Instance& inst);

}  // namespace detrees::app
