#include "detrees/poly/groebner.hpp"

#include <algorithm>
#include <set>

#include "detrees/errors.hpp"

namespace detrees::poly {
namespace {

std::uint32_t graded_degree(const Monomial& m, const std::vector<std::uint32_t>& grading) {
  if (grading.empty()) return m.degree();
  std::uint32_t d = 0;
  for (VarIndex v = 0; v < m.size(); ++v) d += grading[v] * m[v];
  return d;
}

class Reducer {
 public:
  explicit Reducer(const Field& field) : field_(field) {}

  void add(const Polynomial* g) {
    gs_.push_back(g);
    inv_lc_.push_back(field_.inv(g->lead_coeff()));
    masks_.push_back(g->lead_monomial().support_mask());
  }

  std::optional<std::size_t> find(const Monomial& m) const {
    const std::uint64_t mask = m.support_mask();
    for (std::size_t i = 0; i < gs_.size(); ++i) {
      if ((masks_[i] & ~mask) != 0) continue;
      if (gs_[i]->lead_monomial().divides(m)) return i;
    }
    return std::nullopt;
  }

  std::size_t size() const { return gs_.size(); }

  // Full reduction: no term of the result is divisible by a leading monomial.
  Polynomial reduce(Polynomial p, std::vector<Polynomial>* quotients = nullptr) const {
    std::vector<Term> rem;
    RingPtr ring = p.ring();
    OrderPtr order = p.order();
    while (!p.is_zero()) {
      const Term& lt = p.lead_term();
      auto idx = find(lt.mono);
      if (!idx) {
        rem.push_back(p.take_lead());
        continue;
      }
      const Polynomial& g = *gs_[*idx];
      Rational c = field_.mul(lt.coeff, inv_lc_[*idx]);
      Monomial q = lt.mono / g.lead_monomial();
      if (quotients) {
        (*quotients)[*idx].add_scaled(c, q, Polynomial::constant(ring, order, 1));
      }
      p.add_scaled(field_.neg(c), q, g);
    }
    return Polynomial::from_sorted(std::move(ring), std::move(order), std::move(rem));
  }

 private:
  Field field_;
  std::vector<const Polynomial*> gs_;
  std::vector<Rational> inv_lc_;
  std::vector<std::uint64_t> masks_;
};

std::vector<Polynomial> resorted(std::span<const Polynomial> G, const OrderPtr& order) {
  std::vector<Polynomial> out;
  out.reserve(G.size());
  for (const Polynomial& g : G) out.push_back(g.with_order(order));
  return out;
}

struct Pair {
  std::uint32_t sugar;
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

struct Entry {
  Polynomial poly;
  std::uint32_t sugar;
  bool live;
};

class Buchberger {
 public:
  Buchberger(const OrderPtr& order, const GroebnerOptions& opts)
      : order_(order), opts_(opts), pairs_(PairLess{order.get()}) {}

  GroebnerResult run(std::span<const Polynomial> input) {
    GroebnerResult result;
    if (input.empty()) return result;
    ring_ = input.front().ring();
    for (const Polynomial& f0 : input) {
      Polynomial f = f0.with_order(order_);
      f = reduce_by_live(std::move(f));
      if (f.is_zero()) continue;
      insert(f.monic(), graded_degree(f.lead_monomial(), opts_.grading));
    }
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (opts_.degree_bound && p.sugar > *opts_.degree_bound) {
        ++result.pairs_deferred;
        result.complete = false;
        continue;
      }
      ++result.pairs_reduced;
      Polynomial s = s_polynomial(entries_[p.i].poly, entries_[p.j].poly, order_);
      s = reduce_by_live(std::move(s));
      if (s.is_zero()) continue;
      insert(s.monic(), p.sugar);
    }
    result.basis = finish();
    return result;
  }

 private:
  struct PairLess {
    const TermOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      auto c = order->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  Polynomial reduce_by_live(Polynomial f) const {
    Reducer r(ring_->field());
    for (const Entry& e : entries_) {
      if (e.live) r.add(&e.poly);
    }
    return r.reduce(std::move(f));
  }

  std::uint32_t pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    const Entry& a = entries_[i];
    const Entry& b = entries_[j];
    std::uint32_t sa = a.sugar + graded_degree(l, opts_.grading) - graded_degree(a.poly.lead_monomial(), opts_.grading);
    std::uint32_t sb = b.sugar + graded_degree(l, opts_.grading) - graded_degree(b.poly.lead_monomial(), opts_.grading);
    return std::max(sa, sb);
  }

  // Gebauer-Moeller update for a new element h.
  void insert(Polynomial h, std::uint32_t sugar) {
    const std::size_t k = entries_.size();
    const Monomial hm = h.lead_monomial();
    entries_.push_back(Entry{std::move(h), sugar, true});

    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      if (!entries_[i].live) continue;
      Monomial l = lcm(entries_[i].poly.lead_monomial(), hm);
      fresh.push_back(Pair{pair_sugar(i, k, l), std::move(l), i, k});
    }

    // Chain criterion among the new pairs.
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (!fresh[b].lcm.divides(fresh[a].lcm)) continue;
        if (fresh[b].lcm != fresh[a].lcm || b < a) {
          keep[a] = false;
          break;
        }
      }
    }
    // Product criterion.
    std::vector<Pair> accepted;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      if (entries_[fresh[a].i].poly.lead_monomial().coprime(hm)) continue;
      accepted.push_back(std::move(fresh[a]));
    }

    // Old pairs made redundant by h.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->lcm;
      if (hm.divides(l) && lcm(entries_[it->i].poly.lead_monomial(), hm) != l &&
          lcm(entries_[it->j].poly.lead_monomial(), hm) != l) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    for (Pair& p : accepted) pairs_.insert(std::move(p));

    for (std::size_t i = 0; i < k; ++i) {
      if (entries_[i].live && hm.divides(entries_[i].poly.lead_monomial())) entries_[i].live = false;
    }
  }

  std::vector<Polynomial> finish() {
    std::vector<Polynomial> basis;
    if (!opts_.reduce) {
      for (const Entry& e : entries_) {
        if (e.live) basis.push_back(e.poly);
      }
      return basis;
    }
    std::vector<const Polynomial*> minimal;
    for (const Entry& e : entries_) {
      if (!e.live) continue;
      const Monomial& m = e.poly.lead_monomial();
      bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                   [&](const Polynomial* g) { return g->lead_monomial().divides(m); });
      if (redundant) continue;
      std::erase_if(minimal, [&](const Polynomial* g) { return m.divides(g->lead_monomial()); });
      minimal.push_back(&e.poly);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      Reducer r(ring_->field());
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) r.add(minimal[j]);
      }
      Polynomial g = *minimal[i];
      Term lead = g.take_lead();
      Polynomial tail = r.reduce(std::move(g));
      std::vector<Term> terms;
      terms.reserve(tail.size() + 1);
      terms.push_back(std::move(lead));
      for (const Term& t : tail.terms()) terms.push_back(t);
      basis.push_back(Polynomial::from_sorted(ring_, order_, std::move(terms)));
    }
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_->greater(a.lead_monomial(), b.lead_monomial());
    });
    return basis;
  }

  OrderPtr order_;
  GroebnerOptions opts_;
  RingPtr ring_;
  std::vector<Entry> entries_;
  std::set<Pair, PairLess> pairs_;
};

}  // namespace

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> G, const OrderPtr& order) {
  std::vector<Polynomial> gs = resorted(G, order);
  Polynomial ff = f.with_order(order);
  DivisionResult out;
  out.quotients.assign(gs.size(), Polynomial(ff.ring(), order));
  // Zero divisors cannot be used; keep their quotient at zero.
  Reducer r(ff.field());
  std::vector<std::size_t> slot;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (gs[i].is_zero()) continue;
    r.add(&gs[i]);
    slot.push_back(i);
  }
  std::vector<Polynomial> qs(slot.size(), Polynomial(ff.ring(), order));
  out.remainder = r.reduce(std::move(ff), &qs);
  for (std::size_t i = 0; i < slot.size(); ++i) out.quotients[slot[i]] = std::move(qs[i]);
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const OrderPtr& order) {
  std::vector<Polynomial> gs = resorted(G, order);
  Reducer r(f.field());
  for (const Polynomial& g : gs) {
    if (!g.is_zero()) r.add(&g);
  }
  return r.reduce(f.with_order(order));
}

Polynomial s_polynomial(const Polynomial& f0, const Polynomial& g0, const OrderPtr& order) {
  if (f0.is_zero() || g0.is_zero()) throw PreconditionError("S-polynomial of a zero polynomial");
  Polynomial f = f0.with_order(order);
  Polynomial g = g0.with_order(order);
  const Field& field = f.field();
  Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  Polynomial s = f.scaled(field.inv(f.lead_coeff()), l / f.lead_monomial());
  s.add_scaled(field.neg(field.inv(g.lead_coeff())), l / g.lead_monomial(), g);
  return s;
}

GroebnerResult buchberger(std::span<const Polynomial> G, const OrderPtr& order, const GroebnerOptions& opts) {
  if (!opts.grading.empty() && !G.empty() && opts.grading.size() != G.front().ring()->size()) {
    throw PreconditionError("grading must have one entry per ring variable");
  }
  Buchberger b(order, opts);
  return b.run(G);
}

EliminationResult eliminate(std::span<const Polynomial> G, const std::vector<Variable>& kill,
                            const MonomialOrderSpec& tiebreak, const GroebnerOptions& opts) {
  EliminationResult out;
  if (G.empty()) return out;
  const RingPtr& ring = G.front().ring();
  OrderPtr elim = TermOrder::compile(MonomialOrderSpec::elimination(kill, tiebreak), *ring);
  OrderPtr tb = TermOrder::compile(tiebreak, *ring);
  GroebnerResult gb = buchberger(G, elim, opts);
  out.complete = gb.complete;
  out.pairs_reduced = gb.pairs_reduced;
  std::vector<VarIndex> killed;
  for (const Variable& v : kill) {
    if (auto idx = ring->find(v)) killed.push_back(*idx);
  }
  for (const Polynomial& g : gb.basis) {
    bool free = std::none_of(killed.begin(), killed.end(), [&](VarIndex v) { return g.uses_variable(v); });
    if (free) out.generators.push_back(g.with_order(tb));
  }
  return out;
}

std::optional<PairFailure> first_failing_pair(std::span<const Polynomial> G, const OrderPtr& order) {
  std::vector<Polynomial> gs = resorted(G, order);
  Reducer r(gs.empty() ? Field::rational() : gs.front().field());
  for (const Polynomial& g : gs) {
    if (!g.is_zero()) r.add(&g);
  }
  for (std::size_t j = 0; j < gs.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (gs[i].is_zero() || gs[j].is_zero()) continue;
      if (gs[i].lead_monomial().coprime(gs[j].lead_monomial())) continue;
      Polynomial rem = r.reduce(s_polynomial(gs[i], gs[j], order));
      if (!rem.is_zero()) return PairFailure{i, j, std::move(rem)};
    }
  }
  return std::nullopt;
}

}  // namespace detrees::poly
