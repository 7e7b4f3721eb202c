#include <algorithm>
#include <map>
#include <set>

#include "detrees/errors.hpp"
#include "detrees/poly/text.hpp"
#include "detrees/verify/certify.hpp"

namespace detrees::verify {

using poly::Monomial;
using poly::Polynomial;
using poly::VarIndex;

std::vector<SubalgebraGenerator> sagbi_generators(const Instance& inst, bool with_x) {
  std::vector<SubalgebraGenerator> out;
  const auto& R = *inst.ring();
  if (with_x) {
    for (VarIndex v : R.family(poly::Family::X)) {
      const poly::Variable& x = R.var(v);
      if (!inst.entry_present(x.row, x.col)) continue;
      out.push_back({v, Polynomial::monomial(inst.ring(), inst.tau_prime(), Monomial::variable(R.size(), v)), 0});
    }
  }
  for (ImageOf& g : presentation_images(inst, MapKind::Actual)) {
    out.push_back({g.var, std::move(g.image), R.var(g.var).comp});
  }
  return out;
}

Subductor::Subductor(std::vector<Polynomial> gens, poly::OrderPtr order) : order_(std::move(order)) {
  for (Polynomial& g : gens) {
    if (g.is_zero()) throw PreconditionError("subduction generators must be nonzero");
    gens_.push_back(g.with_order(order_));
  }
  const std::size_t nvars = gens_.empty() ? 0 : gens_.front().ring()->size();
  linear_of_var_.assign(nvars, -1);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const Monomial& lm = gens_[i].lead_monomial();
    if (lm.degree() == 1) {
      VarIndex v = 0;
      while (lm[v] == 0) ++v;
      if (linear_of_var_[v] < 0) {
        linear_of_var_[v] = static_cast<long>(i);
        linear_.push_back(i);
        continue;
      }
    }
    others_.push_back(i);
  }
}

bool Subductor::search(const Monomial& rest, std::size_t from, std::vector<std::uint32_t>& exps,
                       FailMemo& failed) const {
  bool linear_only = true;
  for (VarIndex v = 0; v < rest.size() && linear_only; ++v) {
    if (rest[v] != 0 && linear_of_var_[v] < 0) linear_only = false;
  }
  if (linear_only) {
    for (VarIndex v = 0; v < rest.size(); ++v) {
      if (rest[v] != 0) exps[static_cast<std::size_t>(linear_of_var_[v])] += rest[v];
    }
    return true;
  }
  auto it = failed.find(rest);
  if (it != failed.end() && it->second <= from) return false;
  for (std::size_t k = from; k < others_.size(); ++k) {
    const Monomial& lm = gens_[others_[k]].lead_monomial();
    if (!lm.divides(rest)) continue;
    ++exps[others_[k]];
    if (search(rest / lm, k, exps, failed)) return true;
    --exps[others_[k]];
  }
  failed[rest] = from;
  return false;
}

std::optional<std::vector<std::uint32_t>> Subductor::factor(const Monomial& m) const {
  std::vector<std::uint32_t> exps(gens_.size(), 0);
  FailMemo failed;
  if (search(m, 0, exps, failed)) return exps;
  return std::nullopt;
}

Polynomial Subductor::product(const std::vector<std::uint32_t>& exps) const {
  if (gens_.empty()) throw PreconditionError("no generators");
  Polynomial p = Polynomial::constant(gens_.front().ring(), order_, 1);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    for (std::uint32_t e = 0; e < exps[i]; ++e) p = p * gens_[i];
  }
  return p;
}

SubductionResult Subductor::operator()(Polynomial f, std::size_t max_steps) const {
  SubductionResult out;
  f = f.with_order(order_);
  while (!f.is_zero()) {
    if (out.steps >= max_steps) {
      out.exhausted = true;
      break;
    }
    auto exps = factor(f.lead_monomial());
    if (!exps) break;
    Polynomial p = product(*exps);
    const poly::Field& field = f.field();
    poly::Rational c = field.mul(f.lead_coeff(), field.inv(p.lead_coeff()));
    f.add_scaled(field.neg(c), Monomial(f.ring()->size()), p);
    ++out.steps;
  }
  out.residue = std::move(f);
  return out;
}

Polynomial subduct(const Polynomial& f, const std::vector<Polynomial>& gens, const poly::OrderPtr& order) {
  SubductionResult r = Subductor(gens, order)(f);
  if (r.exhausted) throw PreconditionError("subduction did not terminate within the step bound");
  return r.residue;
}

namespace {

// Multiplicity vectors c over the tags with 1 <= |c| <= bound.
void each_count(std::size_t ntags, std::vector<int>& c, std::size_t pos, int left, std::vector<std::vector<int>>& out) {
  if (pos == ntags) {
    int total = 0;
    for (int x : c) total += x;
    if (total > 0) out.push_back(c);
    return;
  }
  for (int k = 0; k <= left; ++k) {
    c[pos] = k;
    each_count(ntags, c, pos + 1, left - k, out);
  }
  c[pos] = 0;
}

class Piece {
 public:
  Piece(const std::vector<std::vector<const Polynomial*>>& by_tag, const std::vector<int>& counts)
      : by_tag_(by_tag), counts_(counts) {}

  template <class F>
  void each_product(const Polynomial& one, F&& f) const {
    walk(0, 0, 0, one, f);
  }

 private:
  template <class F>
  void walk(std::size_t tag, int placed, std::size_t from, const Polynomial& acc, F& f) const {
    if (tag == counts_.size()) {
      f(acc);
      return;
    }
    if (placed == counts_[tag]) {
      walk(tag + 1, 0, 0, acc, f);
      return;
    }
    const auto& gens = by_tag_[tag];
    for (std::size_t i = from; i < gens.size(); ++i) walk(tag, placed + 1, i, acc * *gens[i], f);
  }

  const std::vector<std::vector<const Polynomial*>>& by_tag_;
  const std::vector<int>& counts_;
};

}  // namespace

Certificate certify_sagbi(const std::string& claim, const std::vector<SubalgebraGenerator>& gens,
                          const std::vector<Polynomial>& toric, const poly::OrderPtr& ambient, int degree_bound) {
  Stopwatch clock;
  Certificate cert;
  cert.claim = claim;
  cert.order = ambient->describe();
  cert.bounds["degree"] = degree_bound;
  cert.bounds["generators"] = gens.size();
  cert.bounds["toric_relations"] = toric.size();
  if (gens.empty()) throw PreconditionError("certify_sagbi needs generators");
  const poly::RingPtr& ring = gens.front().image.ring();

  std::vector<ImageOf> images;
  std::vector<Polynomial> polys;
  for (const SubalgebraGenerator& g : gens) {
    images.push_back({g.var, g.image});
    polys.push_back(g.image.with_order(ambient));
  }
  Substitution phi(ring, ambient, images);
  Subductor subductor(polys, ambient);

  cert.parts["lifting"] = "verified";
  for (const Polynomial& f : toric) {
    SubductionResult r = subductor(phi(f));
    if (r.exhausted) {
      cert.inconclusive("lifting", "subduction_steps");
      break;
    }
    if (r.residue.is_zero()) continue;
    cert.falsify("lifting", {{"relation", poly::to_string(f)}, {"residue", poly::to_string(r.residue)}});
    break;
  }

  std::vector<int> tags;
  for (const SubalgebraGenerator& g : gens) tags.push_back(g.tag);
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  std::vector<std::vector<const Polynomial*>> by_tag(tags.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto pos = std::lower_bound(tags.begin(), tags.end(), gens[i].tag) - tags.begin();
    by_tag[static_cast<std::size_t>(pos)].push_back(&polys[i]);
  }
  std::vector<std::vector<int>> pieces;
  std::vector<int> scratch(tags.size(), 0);
  each_count(tags.size(), scratch, 0, degree_bound, pieces);

  cert.parts["initial"] = "verified";
  const Polynomial one = Polynomial::constant(ring, ambient, 1);
  const Monomial unit(ring->size());
  std::size_t products = 0;
  for (const std::vector<int>& counts : pieces) {
    std::map<Monomial, Polynomial, poly::MonomialKeyLess> pivots;
    std::vector<Polynomial> rest;
    Piece(by_tag, counts).each_product(one, [&](const Polynomial& p) {
      ++products;
      auto [it, fresh] = pivots.try_emplace(p.lead_monomial(), p);
      if (!fresh) rest.push_back(p);
    });
    bool failed = false;
    for (Polynomial& p : rest) {
      const poly::Field& field = p.field();
      while (!p.is_zero()) {
        auto it = pivots.find(p.lead_monomial());
        if (it == pivots.end()) break;
        poly::Rational c = field.mul(p.lead_coeff(), field.inv(it->second.lead_coeff()));
        p.add_scaled(field.neg(c), unit, it->second);
      }
      if (p.is_zero()) continue;
      nlohmann::json piece = nlohmann::json::object();
      for (std::size_t k = 0; k < tags.size(); ++k) piece[std::to_string(tags[k])] = counts[k];
      cert.falsify("initial", {{"piece", piece},
                               {"lead", poly::to_string(p.lead_monomial(), *ring)},
                               {"element", poly::to_string(p)}});
      failed = true;
      break;
    }
    if (failed) break;
  }
  cert.bounds["pieces"] = pieces.size();
  cert.bounds["products"] = products;
  cert.elapsed_ms = clock.ms();
  return cert;
}

}  // namespace detrees::verify
