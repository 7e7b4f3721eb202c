#include "detrees/app/commands.hpp"

#include <functional>
#include <future>
#include <set>
#include <sstream>

#include "detrees/errors.hpp"
#include "detrees/poly/text.hpp"
#include "detrees/tableau.hpp"
#include "detrees/verify/certify.hpp"

namespace detrees::app {

using nlohmann::json;
using poly::Polynomial;
using verify::Certificate;

namespace {

json header(const std::string& command, const ProblemSpec& spec, const Instance& inst) {
  return {{"schema", 1},
          {"command", command},
          {"version", kVersion},
          {"spec", to_json(spec)},
          {"instance", inst.describe()},
          {"instance_hash", instance_hash(inst)}};
}

std::string lines(const std::vector<Polynomial>& ps) {
  std::string out;
  for (const Polynomial& p : ps) out += poly::to_string(p) + "\n";
  return out;
}

json texts(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const Polynomial& p : ps) out.push_back(poly::to_string(p));
  return out;
}

bool is_unit(const Instance& inst) { return inst.kind() == IdealKind::UnitInterval; }

[[noreturn]] void refuse_unit_rees(const std::string& what) {
  throw PreconditionError(what +
                          " is not available for unit interval ideals: no generator family is known for their Rees "
                          "algebra (only the fiber). Use `detrees oracle --ambient rees` to explore it.");
}

struct Emitted {
  std::string name;
  rel::RelationFamily family;
};

}  // namespace

Report cmd_generate(const ProblemSpec& spec, const std::string& which) {
  static const std::set<std::string> kinds = {"gens", "en", "plucker-initial", "plucker-lifted", "exchange-h", "all"};
  if (!kinds.count(which)) throw ParseError("which", "unknown family selector '" + which + "'");
  Instance inst = make_instance(spec);
  const bool all = which == "all";
  const bool unit = is_unit(inst);
  if (unit && (which == "en" || which == "exchange-h")) refuse_unit_rees("--which " + which);

  Report rep;
  rep.json = header("generate", spec, inst);
  json manifest = json::object();
  json families = json::array();
  std::ostringstream text;
  text << "# " << inst.describe() << "  hash " << instance_hash(inst) << "\n";

  if (all || which == "gens") {
    json gens = json::array();
    std::string file;
    for (const det::ColumnTuple& c : inst.index_set()) {
      std::string m = poly::to_string(inst.minor(c));
      gens.push_back({{"tuple", det::to_string(c)}, {"minor", m}});
      file += det::to_string(c) + "\t" + m + "\n";
    }
    manifest["gens"] = gens.size();
    families.push_back({{"family", "gens"}, {"order", inst.tau()->describe()}, {"count", gens.size()},
                        {"minors", gens}});
    text << "\n== gens: " << gens.size() << " maximal minors, order " << inst.tau()->describe() << "\n" << file;
    rep.files["gens.txt"] = file;
  }

  std::vector<Emitted> out;
  const int D = spec.bounds.degree;
  if (!unit && (all || which == "en")) {
    out.push_back({"en_initial", rel::en_initial(inst)});
    out.push_back({"en_full", rel::en_full(inst, D)});
  }
  if (all || which == "plucker-initial") out.push_back({"plucker_initial", rel::plucker_initial(inst)});
  if (all || which == "plucker-lifted") {
    rel::Ambient amb = unit ? rel::Ambient::Fiber : rel::Ambient::Rees;
    out.push_back({"plucker_lifted", rel::plucker_lifted(inst, amb, D)});
  }
  if (!unit && (all || which == "exchange-h")) out.push_back({"exchange_H", rel::exchange_H(inst)});

  for (const Emitted& e : out) {
    const auto& f = e.family;
    manifest[e.name] = f.relations.size();
    families.push_back({{"family", e.name},
                        {"ambient", rel::to_string(f.ambient)},
                        {"order", f.order->describe()},
                        {"count", f.relations.size()},
                        {"relations", texts(f.relations)}});
    text << "\n== " << e.name << ": " << f.relations.size() << " relations, " << rel::to_string(f.ambient)
         << ", order " << f.order->describe() << "\n"
         << lines(f.relations);
    rep.files[e.name + ".txt"] = lines(f.relations);
  }
  if (unit && all) manifest["refused"] = json::array({"en_initial", "en_full", "exchange_H"});
  rep.json["manifest"] = manifest;
  rep.json["families"] = families;
  rep.files["manifest.json"] = manifest.dump(2) + "\n";
  rep.text = text.str();
  return rep;
}

namespace {

struct GbClaim {
  std::string id;
  std::vector<Polynomial> claimed;
  poly::OrderPtr order;
  verify::MapKind map;
  rel::Ambient ambient;
};

GbClaim gb_claim(const Instance& inst, const std::string& id, int D) {
  using rel::Ambient;
  using verify::MapKind;
  if (id == "fiber-gb/initial") return {id, rel::plucker_initial(inst).relations, inst.sigma(), MapKind::Initial, Ambient::Fiber};
  if (id == "fiber-gb/lifted") {
    auto f = rel::plucker_lifted(inst, Ambient::Fiber, D);
    return {id, f.relations, f.order, MapKind::Actual, Ambient::Fiber};
  }
  if (is_unit(inst)) refuse_unit_rees("claim " + id);
  if (id == "rees-gb/initial") {
    auto g = rel::en_initial(inst).relations;
    for (Polynomial& p : rel::plucker_initial(inst, Ambient::Rees).relations) g.push_back(p);
    return {id, g, inst.sigma_prime(), MapKind::Initial, Ambient::Rees};
  }
  auto en = rel::en_full(inst, D);
  auto g = en.relations;
  for (Polynomial& p : rel::plucker_lifted(inst, Ambient::Rees, D).relations) g.push_back(p);
  return {id, g, en.order, MapKind::Actual, Ambient::Rees};
}

std::vector<Polynomial> parse_claimed(const std::string& text, const Instance& inst, const poly::OrderPtr& order) {
  std::vector<Polynomial> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    try {
      out.push_back(poly::parse_polynomial(line, inst.ring(), order));
    } catch (const ParseError& e) {
      throw ParseError("claimed-file:" + std::to_string(number), e.what());
    }
  }
  if (out.empty()) throw ParseError("claimed-file", "no polynomials");
  return out;
}

std::string describe(const Certificate& c) {
  std::string s = c.claim + ": " + verify::to_string(c.verdict);
  if (!c.parts.empty()) {
    s += " (";
    bool first = true;
    for (const auto& [k, v] : c.parts.items()) {
      s += (first ? "" : ", ") + k + " " + v.get<std::string>();
      first = false;
    }
    s += ")";
  }
  if (!c.exhausted.empty()) s += " [bound hit: " + c.exhausted + "]";
  s += "\n";
  if (!c.witness.is_null()) s += "  witness: " + c.witness.dump() + "\n";
  return s;
}

}  // namespace

Report cmd_verify(const ProblemSpec& spec, const VerifyOptions& opts) {
  static const std::set<std::string> groups = {"fiber-gb", "rees-gb", "sagbi", "minors-gb", "l-exchange", "all"};
  static const std::set<std::string> members = {"fiber-gb/initial", "fiber-gb/lifted", "rees-gb/initial",
                                                "rees-gb/lifted",   "sagbi/rees",      "sagbi/fiber"};
  if (!groups.count(opts.claim) && !members.count(opts.claim)) {
    throw ParseError("claim", "unknown claim '" + opts.claim + "'");
  }
  Instance inst = make_instance(spec);
  const bool unit = is_unit(inst);
  const int D = spec.bounds.degree;
  const std::uint64_t seed = opts.seed.value_or(default_seed(inst));
  verify::OracleOptions oo;
  oo.degree_bound = D;
  oo.cap = spec.bounds.cap;

  std::vector<std::string> selected;
  const std::vector<std::string> ids = {"fiber-gb/initial", "fiber-gb/lifted", "rees-gb/initial", "rees-gb/lifted",
                                        "sagbi/rees",       "sagbi/fiber",     "minors-gb",       "l-exchange"};
  for (const std::string& id : ids) {
    const std::string group = id.substr(0, id.find('/'));
    const bool all = opts.claim == "all";
    if (!all && opts.claim != group && opts.claim != id) continue;
    if (unit) {
      const bool rees = group == "rees-gb" || id == "sagbi/rees";
      if (all && (id == "minors-gb" || id == "l-exchange")) continue;
      if (rees && (all || opts.claim == "sagbi")) continue;
      if (rees) refuse_unit_rees("claim " + id);
    }
    selected.push_back(id);
  }

  if (opts.claimed_text) {
    std::string target = opts.claim == "fiber-gb" ? "fiber-gb/initial"
                         : opts.claim == "rees-gb" ? "rees-gb/initial"
                                                   : opts.claim;
    if (target.rfind("fiber-gb/", 0) != 0 && target.rfind("rees-gb/", 0) != 0) {
      throw ParseError("claimed-file", "needs a single Groebner claim (fiber-gb, rees-gb or one of their members)");
    }
    selected = {target};
  }

  std::vector<std::function<std::vector<Certificate>()>> tasks;
  for (const std::string& id : selected) {
    if (id.rfind("fiber-gb", 0) == 0 || id.rfind("rees-gb", 0) == 0) {
      tasks.push_back([&, id]() {
        GbClaim c = gb_claim(inst, id, D);
        if (opts.claimed_text) c.claimed = parse_claimed(*opts.claimed_text, inst, c.order);
        std::vector<Certificate> out;
        verify::OracleResult oracle;
        if (c.ambient == rel::Ambient::Fiber) {
          oracle = verify::fiber_kernel_oracle(inst, c.map, verify::FiberMethod::Elimination, c.order, oo);
        } else {
          oracle = verify::rees_kernel_oracle(inst, c.map, c.order, oo);
        }
        out.push_back(verify::certify_groebner(inst, id, c.claimed, c.order, c.map, &oracle));
        if (id == "fiber-gb/initial" && !opts.claimed_text) {
          verify::OracleResult en =
              verify::fiber_kernel_oracle(inst, c.map, verify::FiberMethod::Enumeration, c.order, oo);
          Certificate agree = verify::certify_oracle_agreement(oracle, en, c.order, D);
          agree.claim = "fiber-gb/oracle-agreement";
          agree.instance_hash = instance_hash(inst);
          out.push_back(std::move(agree));
        }
        for (Certificate& cert : out) {
          cert.bounds["degree"] = D;
          cert.bounds["cap"] = oo.cap;
        }
        return out;
      });
    } else if (id == "sagbi/rees" || id == "sagbi/fiber") {
      tasks.push_back([&, id]() {
        const bool rees = id == "sagbi/rees";
        std::vector<Polynomial> toric;
        if (rees) toric = rel::en_initial(inst).relations;
        for (Polynomial& p : rel::plucker_initial(inst, rees ? rel::Ambient::Rees : rel::Ambient::Fiber).relations) {
          toric.push_back(p);
        }
        Certificate c = verify::certify_sagbi(id, verify::sagbi_generators(inst, rees), toric, inst.tau_prime(), D);
        c.instance_hash = instance_hash(inst);
        return std::vector<Certificate>{c};
      });
    } else if (id == "minors-gb") {
      tasks.push_back([&]() { return std::vector<Certificate>{verify::certify_minors_groebner(inst, opts.probes, seed)}; });
    } else if (id == "l-exchange") {
      tasks.push_back([&]() {
        Certificate c = verify::check_l_exchange(*inst.ring(), verify::initial_generators(inst), spec.bounds.gamma);
        c.instance_hash = instance_hash(inst);
        return std::vector<Certificate>{c};
      });
    }
  }

  std::vector<std::future<std::vector<Certificate>>> running;
  for (auto& t : tasks) running.push_back(std::async(std::launch::async, t));
  std::vector<Certificate> certs;
  for (auto& f : running) {
    for (Certificate& c : f.get()) certs.push_back(std::move(c));
  }

  Report rep;
  rep.json = header("verify", spec, inst);
  rep.json["claim"] = opts.claim;
  rep.json["seed"] = seed;
  json all = json::array();
  std::string text = "# " + inst.describe() + "  hash " + instance_hash(inst) + "\n";
  for (const Certificate& c : certs) {
    all.push_back(c.to_json());
    text += describe(c);
  }
  rep.exit_code = verify::exit_code(certs);
  rep.json["certificates"] = all;
  rep.json["exit_code"] = rep.exit_code;
  rep.text = text;
  rep.files["certificates.json"] = all.dump(2) + "\n";
  return rep;
}

Report cmd_standardize(const std::string& tableau_text, const std::optional<ProblemSpec>& spec) {
  tab::Tableau A = tab::parse_tableau(tableau_text);
  if (A.height() == 0) throw ParseError("tableau", "no rows");
  tab::Tableau B = tab::standardize(A);
  det::MatrixShape shape;
  int r = 1;
  if (spec) {
    shape = spec->shape;
    r = spec->r;
  } else {
    shape.n = static_cast<int>(A.width()) - 1;
    for (const tab::Row& row : A.rows) {
      for (std::size_t i = 0; i + 1 < row.size(); ++i) shape.m = std::max(shape.m, row[i]);
      r = std::max(r, row.back());
    }
  }
  const bool in_D = shape.n >= 1 && tab::rows_in_D(A, shape, r);
  const bool semistandard = tab::is_semistandard(A);
  std::string verdict;
  if (!in_D) {
    verdict = "rows outside D x [r]";
  } else if (!semistandard) {
    verdict = "not semistandard";
  } else {
    verdict = tab::is_standard(A, shape, r) ? "standard" : "not standard";
  }
  Report rep;
  rep.json = {{"schema", 1},
              {"command", "standardize"},
              {"version", kVersion},
              {"shape", {{"n", shape.n}, {"m", shape.m}}},
              {"r", r},
              {"input", A.rows},
              {"standardized", B.rows},
              {"verdict", verdict},
              {"changed", !(A == B)}};
  rep.text = "# input: " + verdict + "\n" + tab::format_tableau(B);
  rep.files["standardized.txt"] = tab::format_tableau(B);
  return rep;
}

Report cmd_oracle(const ProblemSpec& spec, const OracleRequest& req) {
  Instance inst = make_instance(spec);
  verify::OracleOptions oo;
  oo.degree_bound = spec.bounds.degree;
  oo.cap = spec.bounds.cap;
  verify::OracleResult res;
  poly::OrderPtr order;
  const bool initial = req.map == verify::MapKind::Initial;
  if (req.ambient == rel::Ambient::Fiber) {
    order = initial ? inst.sigma() : inst.compile(inst.omega_spec(spec.bounds.degree));
    res = verify::fiber_kernel_oracle(inst, req.map, req.method, order, oo);
  } else {
    if (req.method == verify::FiberMethod::Enumeration) {
      throw PreconditionError("fiber enumeration applies to the fiber ambient only");
    }
    order = initial ? inst.sigma_prime() : inst.compile(inst.omega_prime_spec(spec.bounds.degree));
    res = verify::rees_kernel_oracle(inst, req.map, order, oo);
  }
  Report rep;
  rep.json = header("oracle", spec, inst);
  rep.json["map"] = verify::to_string(req.map);
  rep.json["ambient"] = rel::to_string(req.ambient);
  rep.json["method"] = res.method;
  rep.json["order"] = order->describe();
  rep.json["complete"] = res.complete;
  if (!res.complete) rep.json["exhausted"] = res.exhausted;
  rep.json["generators"] = texts(res.generators);
  rep.exit_code = res.complete ? 0 : 2;
  rep.text = "# " + inst.describe() + "  " + rel::to_string(req.ambient) + " kernel, " + verify::to_string(req.map) +
             " map, " + res.method + ", order " + order->describe() + "\n";
  if (!res.complete) rep.text += "# incomplete: " + res.exhausted + "\n";
  rep.text += lines(res.generators);
  rep.files["oracle.txt"] = lines(res.generators);
  return rep;
}

int error_exit_code(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 3;
  if (dynamic_cast<const PreconditionError*>(&e) || dynamic_cast<const ClosureViolation*>(&e)) return 4;
  return 5;
}

}  // namespace detrees::app
