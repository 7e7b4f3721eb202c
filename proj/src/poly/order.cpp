#include "detrees/poly/order.hpp"

#include <algorithm>

#include "detrees/errors.hpp"

namespace detrees::poly {

MonomialOrderSpec MonomialOrderSpec::elimination(std::vector<Variable> kill, MonomialOrderSpec tiebreak) {
  MonomialOrderSpec s = of(Kind::Elimination);
  s.vars = std::move(kill);
  s.tiebreak = std::make_shared<const MonomialOrderSpec>(std::move(tiebreak));
  return s;
}

MonomialOrderSpec MonomialOrderSpec::weight_refined(std::vector<std::pair<Variable, Weight>> weights,
                                                    std::string label, MonomialOrderSpec tiebreak) {
  MonomialOrderSpec s = of(Kind::WeightRefined);
  s.weights = std::move(weights);
  s.weight_label = std::move(label);
  s.tiebreak = std::make_shared<const MonomialOrderSpec>(std::move(tiebreak));
  return s;
}

MonomialOrderSpec MonomialOrderSpec::ranked_lex(std::vector<Variable> ranking) {
  MonomialOrderSpec s = of(Kind::RankedLex);
  s.vars = std::move(ranking);
  return s;
}

std::string MonomialOrderSpec::describe() const {
  switch (kind) {
    case Kind::TauLex:
      return "tau";
    case Kind::DeltaGrevlexT:
      return "delta";
    case Kind::SigmaGrevlexOnT:
      return "sigma";
    case Kind::TauPrimeProduct:
      return "tau'";
    case Kind::SigmaPrimeBlock:
      return "sigma'";
    case Kind::Elimination: {
      std::string s = "elim{";
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i != 0) s += ",";
        s += vars[i].name();
      }
      return s + "} > " + tiebreak->describe();
    }
    case Kind::WeightRefined:
      return "weight[" + weight_label + "] > " + tiebreak->describe();
    case Kind::RankedLex: {
      std::string s = "lex(";
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i != 0) s += ">";
        s += vars[i].name();
      }
      return s + ")";
    }
  }
  return "?";
}

std::vector<VarIndex> tau_ranking(const Ring& ring) {
  std::vector<VarIndex> r = ring.family(Family::X);
  std::sort(r.begin(), r.end(), [&](VarIndex a, VarIndex b) {
    const Variable& u = ring.var(a);
    const Variable& v = ring.var(b);
    return std::pair(u.row, u.col) < std::pair(v.row, v.col);
  });
  return r;
}

std::vector<VarIndex> sigma_ranking(const Ring& ring) {
  std::vector<VarIndex> r = ring.family(Family::T);
  // T_a > T_b iff the first nonzero entry of a-b is negative, i.e. (a, comp)
  // is lexicographically smaller.
  std::sort(r.begin(), r.end(), [&](VarIndex a, VarIndex b) {
    const Variable& u = ring.var(a);
    const Variable& v = ring.var(b);
    return std::tie(u.cols, u.comp) < std::tie(v.cols, v.comp);
  });
  return r;
}

std::vector<VarIndex> delta_ranking(const Ring& ring) {
  std::vector<VarIndex> r = ring.family(Family::Tee);
  std::sort(r.begin(), r.end(), [&](VarIndex a, VarIndex b) { return ring.var(a).comp < ring.var(b).comp; });
  return r;
}

namespace {

using Stage = TermOrder::Stage;

void append_stages(const MonomialOrderSpec& spec, const Ring& ring, std::vector<Stage>& out) {
  using K = MonomialOrderSpec::Kind;
  switch (spec.kind) {
    case K::TauLex:
      out.push_back({Stage::Kind::Lex, tau_ranking(ring), {}});
      return;
    case K::DeltaGrevlexT:
      out.push_back({Stage::Kind::Grevlex, delta_ranking(ring), {}});
      return;
    case K::SigmaGrevlexOnT:
      out.push_back({Stage::Kind::Grevlex, sigma_ranking(ring), {}});
      return;
    case K::TauPrimeProduct:
      out.push_back({Stage::Kind::Grevlex, delta_ranking(ring), {}});
      out.push_back({Stage::Kind::Lex, tau_ranking(ring), {}});
      return;
    case K::SigmaPrimeBlock:
      out.push_back({Stage::Kind::Lex, tau_ranking(ring), {}});
      out.push_back({Stage::Kind::Grevlex, sigma_ranking(ring), {}});
      return;
    case K::Elimination: {
      Stage s{Stage::Kind::Grevlex, {}, {}};
      for (const Variable& v : spec.vars) s.vars.push_back(ring.index(v));
      std::sort(s.vars.begin(), s.vars.end());
      s.vars.erase(std::unique(s.vars.begin(), s.vars.end()), s.vars.end());
      out.push_back(std::move(s));
      if (!spec.tiebreak) throw PreconditionError("elimination order needs a tiebreak order");
      append_stages(*spec.tiebreak, ring, out);
      return;
    }
    case K::WeightRefined: {
      Stage s{Stage::Kind::Weight, {}, {}};
      for (const auto& [v, w] : spec.weights) {
        if (w < 0) throw PreconditionError("weights must be nonnegative");
        s.vars.push_back(ring.index(v));
        s.weights.push_back(w);
      }
      out.push_back(std::move(s));
      if (!spec.tiebreak) throw PreconditionError("weight order needs a tiebreak order");
      append_stages(*spec.tiebreak, ring, out);
      return;
    }
    case K::RankedLex: {
      Stage s{Stage::Kind::Lex, {}, {}};
      for (const Variable& v : spec.vars) s.vars.push_back(ring.index(v));
      out.push_back(std::move(s));
      return;
    }
  }
}

}  // namespace

TermOrder::TermOrder(MonomialOrderSpec spec, std::vector<Stage> stages, std::size_t nvars)
    : spec_(std::move(spec)), stages_(std::move(stages)), domain_(nvars, false) {
  for (const Stage& s : stages_) {
    if (s.kind == Stage::Kind::Weight) continue;
    for (VarIndex v : s.vars) domain_.at(v) = true;
  }
}

std::shared_ptr<const TermOrder> TermOrder::compile(const MonomialOrderSpec& spec, const Ring& ring) {
  std::vector<Stage> stages;
  append_stages(spec, ring, stages);
  return std::make_shared<const TermOrder>(spec, std::move(stages), ring.size());
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const Stage& s : stages_) {
    switch (s.kind) {
      case Stage::Kind::Lex:
        for (VarIndex v : s.vars) {
          if (a[v] != b[v]) return a[v] <=> b[v];
        }
        break;
      case Stage::Kind::Grevlex: {
        std::uint32_t da = 0;
        std::uint32_t db = 0;
        for (VarIndex v : s.vars) {
          da += a[v];
          db += b[v];
        }
        if (da != db) return da <=> db;
        for (auto it = s.vars.rbegin(); it != s.vars.rend(); ++it) {
          if (a[*it] != b[*it]) return b[*it] <=> a[*it];
        }
        break;
      }
      case Stage::Kind::Weight: {
        Weight wa = 0;
        Weight wb = 0;
        for (std::size_t i = 0; i < s.vars.size(); ++i) {
          wa += s.weights[i] * a[s.vars[i]];
          wb += s.weights[i] * b[s.vars[i]];
        }
        if (wa != wb) return wa < wb ? std::strong_ordering::less : std::strong_ordering::greater;
        break;
      }
    }
  }
  return std::strong_ordering::equal;
}

bool TermOrder::covers(const Monomial& m) const {
  if (m.size() != domain_.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[static_cast<VarIndex>(i)] != 0 && !domain_[i]) return false;
  }
  return true;
}

void TermOrder::check_domain(const Monomial& m) const {
  if (m.size() != domain_.size()) throw DomainError("monomial from a different ring");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[static_cast<VarIndex>(i)] != 0 && !domain_[i]) {
      throw DomainError("variable #" + std::to_string(i) + " lies outside the domain of order " + describe());
    }
  }
}

std::strong_ordering compare(const TermOrder& order, const Monomial& a, const Monomial& b) {
  order.check_domain(a);
  order.check_domain(b);
  return order.compare(a, b);
}

}  // namespace detrees::poly
