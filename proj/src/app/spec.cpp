#include "detrees/app/spec.hpp"

#include <fstream>
#include <sstream>

#include "detrees/errors.hpp"

namespace detrees::app {

using nlohmann::json;

namespace {

int integer(const json& j, const std::string& field, int lo, int hi) {
  if (!j.is_number_integer()) throw ParseError(field, "expected an integer");
  const auto v = j.get<long long>();
  if (v < lo || v > hi) {
    throw ParseError(field, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                                std::to_string(v));
  }
  return static_cast<int>(v);
}

std::vector<det::Interval> intervals(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field, "expected a list of [lo, hi] pairs");
  std::vector<det::Interval> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string f = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) throw ParseError(f, "expected a pair [lo, hi]");
    out.push_back({integer(j[i][0], f + "[0]", 1, 64), integer(j[i][1], f + "[1]", 1, 64)});
  }
  return out;
}

void known_keys(const json& j, const std::string& field, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* key : keys) ok = ok || k == key;
    if (!ok) throw ParseError(field.empty() ? k : field + "." + k, "unknown key");
  }
}

}  // namespace

ProblemSpec parse_spec(const json& j) {
  if (!j.is_object()) throw ParseError("", "spec must be a JSON object");
  known_keys(j, "", {"schema", "n", "m", "shape", "r", "ideal", "field", "bounds"});
  if (j.contains("schema") && j["schema"] != 1) throw ParseError("schema", "only schema 1 is supported");
  ProblemSpec spec;
  if (j.contains("shape")) {
    if (j.contains("n") || j.contains("m")) throw ParseError("shape", "give either shape or n and m, not both");
    const json& s = j["shape"];
    if (!s.is_object()) throw ParseError("shape", "expected an object {n, m}");
    known_keys(s, "shape", {"n", "m"});
    if (!s.contains("n") || !s.contains("m")) throw ParseError("shape", "needs n and m");
    spec.shape = {integer(s["n"], "shape.n", 1, 64), integer(s["m"], "shape.m", 1, 64)};
  } else {
    if (!j.contains("n")) throw ParseError("n", "missing");
    if (!j.contains("m")) throw ParseError("m", "missing");
    spec.shape = {integer(j["n"], "n", 1, 64), integer(j["m"], "m", 1, 64)};
  }
  if (spec.shape.n > spec.shape.m) throw ParseError("n", "the matrix needs n <= m");
  spec.r = j.contains("r") ? integer(j["r"], "r", 1, 64) : 1;

  if (!j.contains("ideal")) throw ParseError("ideal", "missing");
  const json& id = j["ideal"];
  if (id.is_string() && id == "generic") {
    spec.ideal = IdealSpec::generic();
  } else {
    if (!id.is_object() || !id.contains("type") || !id["type"].is_string()) {
      throw ParseError("ideal", "expected {\"type\": \"generic\" | \"ladder\" | \"unit_interval\", ...}");
    }
    const std::string type = id["type"];
    if (type == "generic") {
      known_keys(id, "ideal", {"type"});
      spec.ideal = IdealSpec::generic();
    } else if (type == "ladder") {
      known_keys(id, "ideal", {"type", "rows"});
      if (!id.contains("rows")) throw ParseError("ideal.rows", "missing");
      det::LadderSpec ladder{intervals(id["rows"], "ideal.rows")};
      if (static_cast<int>(ladder.rows.size()) != spec.shape.n) {
        throw ParseError("ideal.rows", "expected one row support per matrix row (" + std::to_string(spec.shape.n) + ")");
      }
      try {
        ladder.validate();
      } catch (const DomainError& e) {
        throw ParseError("ideal.rows", e.what());
      }
      if (ladder.shape().m != spec.shape.m) {
        throw ParseError("ideal.rows", "the last row support must end at column m = " + std::to_string(spec.shape.m));
      }
      spec.ideal = IdealSpec::ladder_of(std::move(ladder));
    } else if (type == "unit_interval") {
      known_keys(id, "ideal", {"type", "intervals"});
      if (!id.contains("intervals")) throw ParseError("ideal.intervals", "missing");
      det::UnitIntervalSpec unit{intervals(id["intervals"], "ideal.intervals")};
      try {
        unit.validate(spec.shape);
      } catch (const DomainError& e) {
        throw ParseError("ideal.intervals", e.what());
      }
      spec.ideal = IdealSpec::unit_of(std::move(unit));
    } else {
      throw ParseError("ideal.type", "unknown ideal type '" + type + "'");
    }
  }

  if (j.contains("field")) {
    const json& f = j["field"];
    if (f.is_string() && (f == "rational" || f == "QQ")) {
      spec.field = poly::Field::rational();
    } else if (f.is_string() && f == "prime") {
      spec.field = poly::Field::prime(poly::Field::kDefaultPrime);
    } else if (f.is_object() && f.contains("prime") && f.size() == 1) {
      if (!f["prime"].is_number_unsigned()) throw ParseError("field.prime", "expected a positive integer");
      try {
        spec.field = poly::Field::prime(f["prime"].get<std::uint32_t>());
      } catch (const std::exception& e) {
        throw ParseError("field.prime", e.what());
      }
    } else {
      throw ParseError("field", "expected \"rational\", \"prime\" or {\"prime\": p}");
    }
  }

  if (j.contains("bounds")) {
    const json& b = j["bounds"];
    if (!b.is_object()) throw ParseError("bounds", "expected an object");
    known_keys(b, "bounds", {"degree", "gamma", "cap"});
    if (b.contains("degree")) spec.bounds.degree = integer(b["degree"], "bounds.degree", 1, 12);
    if (b.contains("gamma")) spec.bounds.gamma = integer(b["gamma"], "bounds.gamma", 0, 8);
    if (b.contains("cap")) spec.bounds.cap = static_cast<std::size_t>(integer(b["cap"], "bounds.cap", 0, 100000));
  }
  return spec;
}

ProblemSpec parse_spec_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_spec(j);
}

ProblemSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot read spec file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str());
}

json to_json(const ProblemSpec& spec) {
  json j;
  j["schema"] = 1;
  j["n"] = spec.shape.n;
  j["m"] = spec.shape.m;
  j["r"] = spec.r;
  auto pairs = [](const std::vector<det::Interval>& v) {
    json out = json::array();
    for (const auto& I : v) out.push_back({I.lo, I.hi});
    return out;
  };
  switch (spec.ideal.kind) {
    case IdealKind::Generic:
      j["ideal"] = {{"type", "generic"}};
      break;
    case IdealKind::Ladder:
      j["ideal"] = {{"type", "ladder"}, {"rows", pairs(spec.ideal.ladder.rows)}};
      break;
    case IdealKind::UnitInterval:
      j["ideal"] = {{"type", "unit_interval"}, {"intervals", pairs(spec.ideal.unit.intervals)}};
      break;
  }
  if (spec.field.is_prime()) {
    j["field"] = {{"prime", spec.field.characteristic()}};
  } else {
    j["field"] = "rational";
  }
  j["bounds"] = {{"degree", spec.bounds.degree}, {"gamma", spec.bounds.gamma}, {"cap", spec.bounds.cap}};
  return j;
}

Instance make_instance(const ProblemSpec& spec) { return Instance(spec.shape, spec.ideal, spec.r, spec.field); }

std::uint64_t default_seed(const Instance& inst) { return std::stoull(instance_hash(inst), nullptr, 16); }

}  // namespace detrees::app
