#include <algorithm>

#include "detrees/poly/groebner.hpp"
#include "detrees/poly/text.hpp"
#include "detrees/verify/certify.hpp"

namespace detrees::verify {

using poly::Polynomial;

Certificate certify_groebner(const Instance& inst, const std::string& claim, const std::vector<Polynomial>& claimed,
                             const poly::OrderPtr& order, MapKind map, const OracleResult* oracle) {
  Stopwatch clock;
  Certificate cert;
  cert.claim = claim;
  cert.instance_hash = instance_hash(inst);
  cert.order = order->describe();
  cert.conventions["map"] = to_string(map);
  cert.bounds["claimed"] = claimed.size();

  std::vector<Polynomial> G;
  G.reserve(claimed.size());
  for (const Polynomial& f : claimed) G.push_back(f.with_order(order));

  Substitution sub(inst, map);
  cert.parts["membership"] = "verified";
  for (std::size_t i = 0; i < G.size(); ++i) {
    Polynomial img = sub(G[i]);
    if (img.is_zero()) continue;
    cert.falsify("membership", {{"index", i}, {"element", poly::to_string(G[i])}, {"image", poly::to_string(img)}});
    break;
  }

  cert.parts["closure"] = "verified";
  if (auto fail = poly::first_failing_pair(G, order)) {
    cert.falsify("closure", {{"pair", {fail->i, fail->j}},
                             {"first", poly::to_string(G[fail->i])},
                             {"second", poly::to_string(G[fail->j])},
                             {"remainder", poly::to_string(fail->remainder)}});
  }

  if (oracle == nullptr) {
    cert.parts["completeness"] = "skipped";
  } else {
    cert.conventions["oracle"] = oracle->method;
    cert.bounds["oracle_generators"] = oracle->generators.size();
    if (!oracle->complete) {
      cert.inconclusive("completeness", oracle->exhausted);
    } else {
      cert.parts["completeness"] = "verified";
      for (const Polynomial& g : oracle->generators) {
        Polynomial r = poly::normal_form(g, G, order);
        if (r.is_zero()) continue;
        cert.falsify("completeness", {{"generator", poly::to_string(g.with_order(order))},
                                      {"remainder", poly::to_string(r)}});
        break;
      }
    }
  }
  cert.elapsed_ms = clock.ms();
  return cert;
}

Certificate certify_oracle_agreement(const OracleResult& elimination, const OracleResult& enumeration,
                                     const poly::OrderPtr& order, int degree_bound) {
  Stopwatch clock;
  Certificate cert;
  cert.claim = "oracle-agreement";
  cert.order = order->describe();
  cert.bounds["degree"] = degree_bound;
  if (!elimination.complete) {
    cert.inconclusive("agreement", elimination.exhausted);
    cert.elapsed_ms = clock.ms();
    return cert;
  }
  cert.parts["enumeration_in_elimination"] = "verified";
  std::vector<Polynomial> E;
  for (const Polynomial& g : elimination.generators) E.push_back(g.with_order(order));
  for (const Polynomial& g : enumeration.generators) {
    Polynomial r = poly::normal_form(g, E, order);
    if (r.is_zero()) continue;
    cert.falsify("enumeration_in_elimination", {{"generator", poly::to_string(g)}, {"remainder", poly::to_string(r)}});
    break;
  }
  cert.parts["elimination_in_enumeration"] = "verified";
  poly::GroebnerOptions go;
  go.degree_bound = static_cast<std::uint32_t>(degree_bound);
  std::vector<Polynomial> F = enumeration.generators.empty()
                                  ? std::vector<Polynomial>{}
                                  : poly::buchberger(enumeration.generators, order, go).basis;
  std::size_t beyond = 0;
  for (const Polynomial& g : E) {
    if (g.total_degree() > static_cast<std::uint32_t>(degree_bound)) {
      ++beyond;
      continue;
    }
    Polynomial r = poly::normal_form(g, F, order);
    if (r.is_zero()) continue;
    cert.falsify("elimination_in_enumeration", {{"generator", poly::to_string(g)}, {"remainder", poly::to_string(r)}});
    break;
  }
  cert.bounds["beyond_degree"] = beyond;
  if (beyond > 0) cert.inconclusive("elimination_in_enumeration", "degree");
  cert.elapsed_ms = clock.ms();
  return cert;
}

}  // namespace detrees::verify
