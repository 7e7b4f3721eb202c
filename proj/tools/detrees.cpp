#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "detrees/app/commands.hpp"
#include "detrees/errors.hpp"

using namespace detrees;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Common {
  std::string spec_path;
  std::optional<int> degree;
  std::optional<int> gamma;
  std::optional<std::string> field;
  std::string out_dir;
  std::string format = "text";
};

app::ProblemSpec load(const Common& c) {
  app::ProblemSpec spec = app::load_spec(c.spec_path);
  if (c.degree) {
    if (*c.degree < 1 || *c.degree > 12) throw ParseError("--degree-bound", "must lie in [1, 12]");
    spec.bounds.degree = *c.degree;
  }
  if (c.gamma) {
    if (*c.gamma < 0 || *c.gamma > 8) throw ParseError("--gamma", "must lie in [0, 8]");
    spec.bounds.gamma = *c.gamma;
  }
  if (c.field) {
    if (*c.field == "rational" || *c.field == "QQ") {
      spec.field = poly::Field::rational();
    } else {
      try {
        spec.field = poly::Field::prime(static_cast<std::uint32_t>(std::stoul(*c.field)));
      } catch (const std::exception& e) {
        throw ParseError("--field", std::string("expected 'rational' or a prime: ") + e.what());
      }
    }
  }
  return spec;
}

int emit(const app::Report& rep, const Common& c) {
  if (!c.out_dir.empty()) {
    std::filesystem::create_directories(c.out_dir);
    for (const auto& [name, content] : rep.files) std::ofstream(std::filesystem::path(c.out_dir) / name) << content;
    std::ofstream(std::filesystem::path(c.out_dir) / "report.json") << rep.json.dump(2) << "\n";
  }
  if (c.format == "json") {
    std::cout << rep.json.dump(2) << "\n";
  } else {
    std::cout << rep.text;
  }
  return rep.exit_code;
}

void add_common(CLI::App* cmd, Common& c, bool needs_spec) {
  auto* opt = cmd->add_option("--spec", c.spec_path, "problem spec (JSON)");
  if (needs_spec) opt->required()->check(CLI::ExistingFile);
  cmd->add_option("--degree-bound", c.degree, "degree bound D (default from spec, 4)");
  cmd->add_option("--gamma", c.gamma, "exchange bound (default from spec, 2)");
  cmd->add_option("--field", c.field, "'rational' or a prime p");
  cmd->add_option("--out", c.out_dir, "write the report and artifacts into this directory");
  cmd->add_option("--format", c.format, "stdout format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Determinantal Rees algebras and fibers: relation families and certificates"};
  cli.require_subcommand(1);
  cli.set_version_flag("--version", std::string(app::kVersion));

  Common common;
  std::string which = "all";
  auto* gen = cli.add_subcommand("generate", "emit generator and relation families");
  add_common(gen, common, true);
  gen->add_option("--which", which)->check(
      CLI::IsMember({"gens", "en", "plucker-initial", "plucker-lifted", "exchange-h", "all"}));

  app::VerifyOptions vopts;
  std::string claimed_file;
  std::optional<std::uint64_t> seed;
  auto* ver = cli.add_subcommand("verify", "certify the Groebner, SAGBI and exchange claims");
  add_common(ver, common, true);
  ver->add_option("--claim", vopts.claim, "fiber-gb, rees-gb, sagbi, minors-gb, l-exchange, all, or a member");
  ver->add_option("--seed", seed, "seed for the random lex probes (default from the instance hash)");
  ver->add_option("--probes", vopts.probes, "number of random lex probes");
  ver->add_option("--claimed-file", claimed_file, "replace a Groebner claim's family, one polynomial per line")
      ->check(CLI::ExistingFile);

  std::string tableau_path;
  auto* std_cmd = cli.add_subcommand("standardize", "standardize a tableau and report whether it was standard");
  add_common(std_cmd, common, false);
  std_cmd->add_option("tableau", tableau_path, "tableau file, one row per line")->required()->check(CLI::ExistingFile);

  std::string map = "initial", ambient = "fiber", method = "elimination";
  auto* orc = cli.add_subcommand("oracle", "dump the kernel computed by an oracle");
  add_common(orc, common, true);
  orc->add_option("--map", map)->check(CLI::IsMember({"initial", "actual"}));
  orc->add_option("--ambient", ambient)->check(CLI::IsMember({"fiber", "rees"}));
  orc->add_option("--method", method)->check(CLI::IsMember({"elimination", "enumeration"}));

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = cli.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (*gen) return emit(app::cmd_generate(load(common), which), common);
    if (*ver) {
      vopts.seed = seed;
      if (!claimed_file.empty()) vopts.claimed_text = slurp(claimed_file);
      return emit(app::cmd_verify(load(common), vopts), common);
    }
    if (*std_cmd) {
      std::optional<app::ProblemSpec> spec;
      if (!common.spec_path.empty()) spec = load(common);
      return emit(app::cmd_standardize(slurp(tableau_path), spec), common);
    }
    if (*orc) {
      app::OracleRequest req;
      req.map = map == "actual" ? verify::MapKind::Actual : verify::MapKind::Initial;
      req.ambient = ambient == "rees" ? rel::Ambient::Rees : rel::Ambient::Fiber;
      req.method = method == "enumeration" ? verify::FiberMethod::Enumeration : verify::FiberMethod::Elimination;
      return emit(app::cmd_oracle(load(common), req), common);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return app::error_exit_code(e);
  }
  return 5;
}
