#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "detrees/app/commands.hpp"
#include "detrees/errors.hpp"
#include "detrees/tableau.hpp"

namespace py = pybind11;
using namespace detrees;

namespace {

tab::Tableau to_tableau(const std::vector<std::vector<int>>& rows) {
  tab::Tableau A{rows};
  for (const auto& row : A.rows) {
    if (row.size() != A.width()) throw ParseError("tableau", "rows of different lengths");
  }
  return A;
}

py::tuple report(const app::Report& r) { return py::make_tuple(r.json.dump(), r.text, r.files, r.exit_code); }

template <class T>
T pick(const std::string& value, const std::string& what, std::initializer_list<std::pair<const char*, T>> choices) {
  for (const auto& [name, v] : choices)
    if (value == name) return v;
  throw PreconditionError("unknown " + what + " '" + value + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rees algebras and fibers of determinantal ideals: relation families and certificates";
  m.attr("__version__") = app::kVersion;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ClosureViolation>(m, "ClosureViolation", PyExc_RuntimeError);

  m.def("standardize", [](const std::vector<std::vector<int>>& rows) { return tab::standardize(to_tableau(rows)).rows; },
        py::arg("rows"));
  m.def("support", [](const std::vector<std::vector<int>>& rows) { return tab::support(to_tableau(rows)); }, py::arg("rows"));
  m.def("is_standard",
        [](const std::vector<std::vector<int>>& rows, int n, int m, int r) {
          return tab::is_standard(to_tableau(rows), det::MatrixShape{n, m}, r);
        },
        py::arg("rows"), py::arg("n"), py::arg("m"), py::arg("r"));

  m.def("generate",
        [](const std::string& spec, const std::string& which) {
          return report(app::cmd_generate(app::parse_spec_text(spec), which));
        },
        py::arg("spec"), py::arg("which") = "all");

  m.def("verify",
        [](const std::string& spec, const std::string& claim, std::optional<std::uint64_t> seed, std::size_t probes,
           std::optional<std::string> claimed) {
          app::VerifyOptions opts;
          opts.claim = claim;
          opts.seed = seed;
          opts.probes = probes;
          opts.claimed_text = std::move(claimed);
          app::ProblemSpec parsed = app::parse_spec_text(spec);
          app::Report r;
          {
            py::gil_scoped_release release;
            r = app::cmd_verify(parsed, opts);
          }
          return report(r);
        },
        py::arg("spec"), py::arg("claim") = "all", py::arg("seed") = py::none(), py::arg("probes") = 5,
        py::arg("claimed") = py::none());

  m.def("oracle",
        [](const std::string& spec, const std::string& map, const std::string& ambient, const std::string& method) {
          app::OracleRequest req;
          req.map = pick<verify::MapKind>(map, "map", {{"initial", verify::MapKind::Initial}, {"actual", verify::MapKind::Actual}});
          req.ambient = pick<rel::Ambient>(ambient, "ambient", {{"fiber", rel::Ambient::Fiber}, {"rees", rel::Ambient::Rees}});
          req.method = pick<verify::FiberMethod>(
              method, "method",
              {{"elimination", verify::FiberMethod::Elimination}, {"enumeration", verify::FiberMethod::Enumeration}});
          app::ProblemSpec parsed = app::parse_spec_text(spec);
          app::Report r;
          {
            py::gil_scoped_release release;
            r = app::cmd_oracle(parsed, req);
          }
          return report(r);
        },
        py::arg("spec"), py::arg("map") = "initial", py::arg("ambient") = "fiber", py::arg("method") = "elimination");

  m.def("standardize_report",
        [](const std::string& tableau, std::optional<std::string> spec) {
          std::optional<app::ProblemSpec> parsed;
          if (spec) parsed = app::parse_spec_text(*spec);
          return report(app::cmd_standardize(tableau, parsed));
        },
        py::arg("tableau"), py::arg("spec") = py::none());
}
