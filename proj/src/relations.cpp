#include "detrees/relations.hpp"

#include <algorithm>
#include <set>

#include "detrees/errors.hpp"
#include "detrees/poly/text.hpp"
#include "detrees/tableau.hpp"

namespace detrees::rel {

using det::ColumnTuple;
using det::IndexedTuple;
using poly::Monomial;
using poly::OrderPtr;
using poly::Polynomial;
using poly::Rational;
using poly::Term;
using poly::Variable;

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::ENInitial:
      return "en_initial";
    case Kind::ENFull:
      return "en_full";
    case Kind::PluckerInitial:
      return "plucker_initial";
    case Kind::PluckerLifted:
      return "plucker_lifted";
    case Kind::ExchangeH:
      return "exchange_h";
  }
  return {};
}

std::string to_string(Ambient ambient) { return ambient == Ambient::Fiber ? "fiber" : "rees"; }

Polynomial canonical(const Polynomial& f, const OrderPtr& order) { return f.with_order(order).monic(); }

namespace {

void finish(RelationFamily& fam) {
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  for (Polynomial& p : fam.relations) {
    if (p.is_zero()) continue;
    p = canonical(p, fam.order);
    if (seen.insert(poly::to_string(p)).second) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return fam.order->greater(a.lead_monomial(), b.lead_monomial());
  });
  fam.relations = std::move(out);
}

void refuse_unit_rees(const Instance& inst, const std::string& what) {
  if (inst.kind() == IdealKind::UnitInterval) {
    throw PreconditionError(what +
                            " is not defined for unit interval ideals: their Rees algebra is outside the scope of this "
                            "tool (only the fiber ring is handled)");
  }
}

ColumnTuple without(const ColumnTuple& c, std::size_t j) {
  ColumnTuple out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (i != j) out.push_back(c[i]);
  return out;
}

Monomial xT(const Instance& inst, int i, int col, const ColumnTuple& cols, int k) {
  const auto& R = *inst.ring();
  Monomial m(R.size());
  m.set(R.index(Variable::x(i, col)), 1);
  m.set(R.index(Variable::T(cols, k)), 1);
  return m;
}

// (n+1)-subsets of [m].
std::vector<ColumnTuple> subsets(const Instance& inst) {
  det::MatrixShape s{inst.shape().n + 1, inst.shape().m};
  if (s.n > s.m) return {};
  return det::enumerate_D(s);
}

}  // namespace

RelationFamily en_initial(const Instance& inst) {
  refuse_unit_rees(inst, "en_initial");
  RelationFamily fam{Kind::ENInitial, Ambient::Rees, inst.sigma_prime(), {}};
  const int n = inst.shape().n;
  for (const ColumnTuple& c : subsets(inst)) {
    for (int i = 1; i <= n; ++i) {
      ColumnTuple left = without(c, i - 1), right = without(c, i);
      if (!inst.in_index_set(left) || !inst.in_index_set(right)) continue;
      for (int k = 1; k <= inst.r(); ++k) {
        std::vector<Term> terms{{Rational(1), xT(inst, i, c[i - 1], left, k)},
                                {Rational(-1), xT(inst, i, c[i], right, k)}};
        fam.relations.push_back(Polynomial::from_terms(inst.ring(), fam.order, std::move(terms)));
      }
    }
  }
  finish(fam);
  return fam;
}

RelationFamily en_full(const Instance& inst, int degree_bound) {
  refuse_unit_rees(inst, "en_full");
  RelationFamily fam{Kind::ENFull, Ambient::Rees, inst.compile(inst.omega_prime_spec(degree_bound)), {}};
  const int n = inst.shape().n;
  for (const ColumnTuple& c : subsets(inst)) {
    for (int i = 1; i <= n; ++i) {
      for (int k = 1; k <= inst.r(); ++k) {
        std::vector<Term> terms;
        for (int j = 1; j <= n + 1; ++j) {
          ColumnTuple rest = without(c, j - 1);
          if (!inst.in_index_set(rest) || !inst.entry_present(i, c[j - 1])) continue;
          terms.push_back({Rational((i + j) % 2 == 0 ? 1 : -1), xT(inst, i, c[j - 1], rest, k)});
        }
        fam.relations.push_back(Polynomial::from_terms(inst.ring(), fam.order, std::move(terms)));
      }
    }
  }
  finish(fam);
  return fam;
}

namespace {

// Non-standard pairs a >_tau b of the index set x [r].
template <class F>
void for_each_nonstandard_pair(const Instance& inst, F&& f) {
  std::vector<IndexedTuple> all = inst.indexed_tuples();
  std::sort(all.begin(), all.end(), [](const IndexedTuple& a, const IndexedTuple& b) { return tab::tau_greater(a, b); });
  for (std::size_t x = 0; x < all.size(); ++x) {
    for (std::size_t y = x + 1; y < all.size(); ++y) {
      if (tab::is_standard_pair(all[x], all[y])) continue;
      f(all[x], all[y]);
    }
  }
}

Monomial TT(const Instance& inst, const IndexedTuple& a, const IndexedTuple& b) {
  return inst.T_monomial(a) * inst.T_monomial(b);
}

void check_closure(const Instance& inst, const IndexedTuple& a, const IndexedTuple& b, const IndexedTuple& c,
                   const IndexedTuple& d) {
  for (const IndexedTuple* t : {&c, &d}) {
    if (!inst.in_index_set(t->cols)) {
      throw ClosureViolation("standardizing " + det::to_string(a) + ", " + det::to_string(b) + " leaves the index set",
                             det::to_string(*t));
    }
  }
}

}  // namespace

RelationFamily plucker_initial(const Instance& inst, Ambient ambient) {
  RelationFamily fam{Kind::PluckerInitial, ambient, ambient == Ambient::Fiber ? inst.sigma() : inst.sigma_prime(), {}};
  for_each_nonstandard_pair(inst, [&](const IndexedTuple& a, const IndexedTuple& b) {
    auto [c, d] = tab::standard_pair(a, b);
    check_closure(inst, a, b, c, d);
    std::vector<Term> terms{{Rational(1), TT(inst, a, b)}, {Rational(-1), TT(inst, c, d)}};
    fam.relations.push_back(Polynomial::from_terms(inst.ring(), fam.order, std::move(terms)));
  });
  finish(fam);
  return fam;
}

namespace {

struct EchelonRow {
  Polynomial poly;
  std::vector<Rational> combo;
};

// Reduces f against rows whose leading monomials are pairwise distinct,
// tracking the combination; returns the remainder's top-reduced form.
void top_reduce(Polynomial& f, std::vector<Rational>& combo, const std::vector<EchelonRow>& rows,
                const poly::Field& field) {
  bool progress = true;
  while (!f.is_zero() && progress) {
    progress = false;
    for (const EchelonRow& row : rows) {
      if (row.poly.lead_monomial() != f.lead_monomial()) continue;
      Rational c = field.div(f.lead_coeff(), row.poly.lead_coeff());
      f.add_scaled(field.neg(c), Monomial(f.ring()->size()), row.poly);
      for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = field.sub(combo[i], field.mul(c, row.combo[i]));
      progress = true;
      break;
    }
  }
}

}  // namespace

Polynomial lift_pair(const Instance& inst, const IndexedTuple& a, const IndexedTuple& b, const OrderPtr& order) {
  const poly::Field& field = inst.field();
  auto [c, d] = tab::standard_pair(a, b);
  check_closure(inst, a, b, c, d);
  std::vector<std::pair<IndexedTuple, IndexedTuple>> vibs;
  for (auto& [e, g] : tab::vibrations(a, b)) {
    bool inside = inst.in_index_set(e.cols) && inst.in_index_set(g.cols);
    if (inside) {
      vibs.emplace_back(e, g);
    } else if (inst.kind() != IdealKind::Ladder) {
      // Generic or unit minors outside the index set are nonzero, so the
      // vibration would need a variable that does not exist.
      throw ClosureViolation("vibration of " + det::to_string(a) + ", " + det::to_string(b) + " leaves the index set",
                             det::to_string(e) + " " + det::to_string(g));
    }
  }
  std::vector<EchelonRow> rows;
  const std::size_t k = vibs.size();
  for (std::size_t v = 0; v < k; ++v) {
    Polynomial p = inst.minor(vibs[v].first.cols) * inst.minor(vibs[v].second.cols);
    std::vector<Rational> combo(k, Rational(0));
    combo[v] = 1;
    top_reduce(p, combo, rows, field);
    if (!p.is_zero()) rows.push_back({std::move(p), std::move(combo)});
  }
  Polynomial target = inst.minor(a.cols) * inst.minor(b.cols) - inst.minor(c.cols) * inst.minor(d.cols);
  std::vector<Rational> combo(k, Rational(0));
  top_reduce(target, combo, rows, field);
  if (!target.is_zero()) {
    throw DomainError("no exact lift for the pair " + det::to_string(a) + ", " + det::to_string(b) +
                      ": residue " + poly::to_string(target));
  }
  // target - sum combo_v P_v = 0, so |a||b| - |c||d| = sum combo_v P_v and the
  // relation is T_a T_b - T_c T_d - sum combo_v T_e T_g.
  std::vector<Term> terms{{Rational(1), TT(inst, a, b)}, {field.minus_one(), TT(inst, c, d)}};
  for (std::size_t v = 0; v < k; ++v) {
    if (sgn(combo[v]) == 0) continue;
    terms.push_back({field.reduce(combo[v]), TT(inst, vibs[v].first, vibs[v].second)});
  }
  return Polynomial::from_terms(inst.ring(), order, std::move(terms));
}

RelationFamily plucker_lifted(const Instance& inst, Ambient ambient, int degree_bound) {
  if (ambient == Ambient::Rees) refuse_unit_rees(inst, "plucker_lifted in the Rees ring");
  OrderPtr order = inst.compile(ambient == Ambient::Fiber ? inst.omega_spec(degree_bound)
                                                           : inst.omega_prime_spec(degree_bound));
  RelationFamily fam{Kind::PluckerLifted, ambient, order, {}};
  for_each_nonstandard_pair(inst, [&](const IndexedTuple& a, const IndexedTuple& b) {
    fam.relations.push_back(lift_pair(inst, a, b, order));
  });
  finish(fam);
  return fam;
}

std::vector<MonomialComponent> initial_components(const Instance& inst) {
  std::vector<MonomialComponent> comps(inst.r());
  for (int k = 1; k <= inst.r(); ++k) {
    for (const ColumnTuple& c : inst.index_set()) {
      comps[k - 1].gens.push_back(inst.initial_minor(c));
      comps[k - 1].T.push_back(inst.T_index({c, k}));
    }
  }
  return comps;
}

RelationFamily exchange_H(const poly::RingPtr& ring, const OrderPtr& order, const std::vector<MonomialComponent>& comps) {
  RelationFamily fam{Kind::ExchangeH, Ambient::Rees, order, {}};
  std::vector<poly::VarIndex> xs = poly::tau_ranking(*ring);  // largest first
  for (const MonomialComponent& comp : comps) {
    if (comp.gens.size() != comp.T.size()) throw PreconditionError("component needs one T variable per generator");
    for (const Monomial& g : comp.gens) {
      if (g.degree() != comp.gens.front().degree()) throw PreconditionError("component ideal is not equigenerated");
    }
    auto lookup = [&](const Monomial& h) -> std::optional<std::size_t> {
      for (std::size_t j = 0; j < comp.gens.size(); ++j)
        if (comp.gens[j] == h) return j;
      return std::nullopt;
    };
    for (std::size_t j = 0; j < comp.gens.size(); ++j) {
      for (std::size_t p = 0; p < xs.size(); ++p) {
        Monomial x1g = comp.gens[j] * Monomial::variable(ring->size(), xs[p]);
        for (std::size_t q = xs.size(); q-- > p + 1;) {
          if (comp.gens[j][xs[q]] == 0) continue;
          auto jp = lookup(x1g / Monomial::variable(ring->size(), xs[q]));
          if (!jp) continue;
          Monomial lhs = Monomial::variable(ring->size(), xs[p]) * Monomial::variable(ring->size(), comp.T[j]);
          Monomial rhs = Monomial::variable(ring->size(), xs[q]) * Monomial::variable(ring->size(), comp.T[*jp]);
          fam.relations.push_back(
              Polynomial::from_terms(ring, order, {Term{Rational(1), lhs}, Term{Rational(-1), rhs}}));
          break;
        }
      }
    }
  }
  finish(fam);
  return fam;
}

RelationFamily exchange_H(const Instance& inst) {
  refuse_unit_rees(inst, "exchange_h");
  return exchange_H(inst.ring(), inst.sigma_prime(), initial_components(inst));
}

}  // namespace detrees::rel
