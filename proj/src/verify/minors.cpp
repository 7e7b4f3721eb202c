#include <random>

#include "detrees/poly/groebner.hpp"
#include "detrees/poly/text.hpp"
#include "detrees/verify/certify.hpp"

namespace detrees::verify {

using poly::Polynomial;

Certificate certify_minors_groebner(const Instance& inst, std::size_t probes, std::uint64_t seed) {
  Stopwatch clock;
  Certificate cert;
  cert.claim = "minors-gb";
  cert.instance_hash = instance_hash(inst);
  cert.order = inst.tau()->describe();
  cert.bounds["probes"] = probes;
  cert.bounds["seed"] = seed;

  std::vector<Polynomial> minors;
  for (const det::ColumnTuple& c : inst.index_set()) {
    const Polynomial& f = inst.minor(c);
    if (!f.is_zero()) minors.push_back(f);
  }

  auto check = [&](const std::string& part, const poly::OrderPtr& order) {
    auto fail = poly::first_failing_pair(minors, order);
    if (!fail) {
      cert.parts[part] = "verified";
      return;
    }
    cert.falsify(part, {{"order", order->describe()},
                        {"pair", {fail->i, fail->j}},
                        {"remainder", poly::to_string(fail->remainder)}});
  };
  check("tau", inst.tau());

  std::mt19937_64 rng(seed);
  std::vector<poly::Variable> xs = inst.x_vars();
  nlohmann::json orders = nlohmann::json::array();
  for (std::size_t k = 0; k < probes; ++k) {
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[rng() % i]);
    poly::OrderPtr order = inst.compile(poly::MonomialOrderSpec::ranked_lex(xs));
    orders.push_back(order->describe());
    check("probe_" + std::to_string(k + 1), order);
  }
  cert.conventions["probe_orders"] = orders;
  cert.elapsed_ms = clock.ms();
  return cert;
}

}  // namespace detrees::verify
