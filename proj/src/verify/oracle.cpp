#include "detrees/verify/oracle.hpp"

#include <algorithm>
#include <map>

#include "detrees/errors.hpp"
#include "detrees/poly/groebner.hpp"

namespace detrees::verify {

using poly::Monomial;
using poly::Polynomial;
using poly::VarIndex;

std::string to_string(FiberMethod m) { return m == FiberMethod::Elimination ? "elimination" : "fiber_enumeration"; }

OracleResult kernel_by_elimination(const std::vector<ImageOf>& gens, const std::vector<poly::Variable>& kill,
                                   const std::vector<std::uint32_t>& grading, const poly::OrderPtr& order,
                                   std::optional<std::uint32_t> sugar_bound) {
  OracleResult out;
  out.method = "elimination";
  if (gens.empty()) return out;
  const poly::RingPtr& ring = gens.front().image.ring();
  poly::OrderPtr elim = poly::TermOrder::compile(poly::MonomialOrderSpec::elimination(kill, order->spec()), *ring);
  std::vector<Polynomial> input;
  input.reserve(gens.size());
  for (const ImageOf& g : gens) {
    Polynomial p = Polynomial::monomial(ring, elim, Monomial::variable(ring->size(), g.var));
    input.push_back(p - g.image.with_order(elim));
  }
  poly::GroebnerOptions go;
  go.grading = grading;
  go.degree_bound = sugar_bound;
  poly::EliminationResult r = poly::eliminate(input, kill, order->spec(), go);
  out.pairs = r.pairs_reduced;
  out.complete = r.complete;
  if (!r.complete) out.exhausted = "degree_bound";
  for (Polynomial& g : r.generators) out.generators.push_back(g.with_order(order));
  return out;
}

namespace {

// All multisets of size d from [0, k), as nondecreasing index lists.
template <class F>
void each_multiset(std::size_t k, int d, F&& f) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  if (k == 0) return;
  for (;;) {
    f(idx);
    int i = d - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == k - 1) --i;
    if (i < 0) return;
    const std::size_t v = idx[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < d; ++j) idx[static_cast<std::size_t>(j)] = v;
  }
}

}  // namespace

OracleResult kernel_by_enumeration(const poly::RingPtr& ring, const std::vector<VarIndex>& vars,
                                   const std::vector<Monomial>& images, const poly::OrderPtr& order, int degree_bound) {
  if (vars.size() != images.size()) throw PreconditionError("one image per variable is required");
  OracleResult out;
  out.method = "fiber_enumeration";
  for (int d = 1; d <= degree_bound; ++d) {
    std::map<Monomial, std::vector<Monomial>, poly::MonomialKeyLess> fibers;
    each_multiset(vars.size(), d, [&](const std::vector<std::size_t>& idx) {
      Monomial src(ring->size());
      Monomial img = images[idx[0]];
      for (std::size_t i = 0; i < idx.size(); ++i) {
        src.set(vars[idx[i]], static_cast<Monomial::Exponent>(src[vars[idx[i]]] + 1));
        if (i > 0) img = img * images[idx[i]];
      }
      fibers[img].push_back(std::move(src));
    });
    std::vector<Polynomial> reducers;
    if (!out.generators.empty()) {
      poly::GroebnerOptions go;
      go.degree_bound = static_cast<std::uint32_t>(d);
      reducers = poly::buchberger(out.generators, order, go).basis;
    }
    for (auto& [img, mons] : fibers) {
      if (mons.size() < 2) continue;
      std::sort(mons.begin(), mons.end(), [&](const Monomial& a, const Monomial& b) { return order->greater(a, b); });
      for (std::size_t i = 1; i < mons.size(); ++i) {
        Polynomial b = Polynomial::monomial(ring, order, mons[0]) - Polynomial::monomial(ring, order, mons[i]);
        Polynomial nf = poly::normal_form(b, reducers, order);
        if (nf.is_zero()) continue;
        out.generators.push_back(std::move(b));
        reducers.push_back(nf.monic());
      }
    }
  }
  return out;
}

namespace {

std::vector<std::uint32_t> rees_grading(const Instance& inst) {
  const auto& R = *inst.ring();
  std::vector<std::uint32_t> g(R.size(), 1);
  for (VarIndex v : R.family(poly::Family::T)) g[v] = static_cast<std::uint32_t>(inst.shape().n + 1);
  return g;
}

bool over_cap(const Instance& inst, const OracleOptions& opts, OracleResult& out) {
  if (inst.ring()->family(poly::Family::T).size() <= opts.cap) return false;
  out.complete = false;
  out.exhausted = "variable_cap";
  return true;
}

}  // namespace

OracleResult fiber_kernel_oracle(const Instance& inst, MapKind kind, FiberMethod method, const poly::OrderPtr& order,
                                 const OracleOptions& opts) {
  if (method == FiberMethod::Enumeration) {
    if (kind != MapKind::Initial) throw PreconditionError("fiber enumeration needs monomial generators");
    std::vector<VarIndex> vars;
    std::vector<Monomial> imgs;
    for (const ImageOf& g : presentation_images(inst, kind)) {
      vars.push_back(g.var);
      imgs.push_back(g.image.lead_monomial());
    }
    return kernel_by_enumeration(inst.ring(), vars, imgs, order, opts.degree_bound);
  }
  OracleResult out;
  out.method = "elimination";
  if (over_cap(inst, opts, out)) return out;
  std::vector<poly::Variable> kill = inst.x_vars();
  for (const poly::Variable& t : inst.t_vars()) kill.push_back(t);
  return kernel_by_elimination(presentation_images(inst, kind), kill, rees_grading(inst), order, opts.sugar_bound);
}

OracleResult rees_kernel_oracle(const Instance& inst, MapKind kind, const poly::OrderPtr& order,
                                const OracleOptions& opts) {
  OracleResult out;
  out.method = "elimination";
  if (over_cap(inst, opts, out)) return out;
  return kernel_by_elimination(presentation_images(inst, kind), inst.t_vars(), rees_grading(inst), order, opts.sugar_bound);
}

}  // namespace detrees::verify
