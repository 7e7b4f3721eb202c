#pragma once

#include <compare>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "detrees/poly/monomial.hpp"
#include "detrees/poly/ring.hpp"

namespace detrees::poly {

using Weight = __int128;

// Declarative description of a monomial order. Compiled against a ring
// into a TermOrder before use.
//
//   TauLex           lex on x, x[i,j] > x[l,k] iff i<l, or i=l and j<k
//   DeltaGrevlexT    grevlex on t with t[1] > t[2] > ...
//   SigmaGrevlexOnT  grevlex on T, T[a] > T[b] iff the first nonzero entry of
//                    (a,comp_a) - (b,comp_b) is negative
//   TauPrimeProduct  t-part by delta, then x-part by tau
//   SigmaPrimeBlock  x-part by tau, then T-part by sigma
//   Elimination      grevlex on the kill block, then the tiebreak order
//   WeightRefined    integer weight, then the tiebreak order
//   RankedLex        lex with an explicit variable ranking (largest first)
struct MonomialOrderSpec {
  enum class Kind {
    TauLex,
    DeltaGrevlexT,
    SigmaGrevlexOnT,
    TauPrimeProduct,
    SigmaPrimeBlock,
    Elimination,
    WeightRefined,
    RankedLex,
  };

  Kind kind = Kind::TauLex;
  std::vector<Variable> vars;
  std::vector<std::pair<Variable, Weight>> weights;
  std::string weight_label;
  std::shared_ptr<const MonomialOrderSpec> tiebreak;

  static MonomialOrderSpec of(Kind k) {
    MonomialOrderSpec s;
    s.kind = k;
    return s;
  }
  static MonomialOrderSpec tau() { return of(Kind::TauLex); }
  static MonomialOrderSpec delta() { return of(Kind::DeltaGrevlexT); }
  static MonomialOrderSpec sigma() { return of(Kind::SigmaGrevlexOnT); }
  static MonomialOrderSpec tau_prime() { return of(Kind::TauPrimeProduct); }
  static MonomialOrderSpec sigma_prime() { return of(Kind::SigmaPrimeBlock); }
  static MonomialOrderSpec elimination(std::vector<Variable> kill, MonomialOrderSpec tiebreak);
  static MonomialOrderSpec weight_refined(std::vector<std::pair<Variable, Weight>> weights, std::string label,
                                          MonomialOrderSpec tiebreak);
  static MonomialOrderSpec ranked_lex(std::vector<Variable> ranking);

  std::string describe() const;
};

class TermOrder {
 public:
  struct Stage {
    enum class Kind { Lex, Grevlex, Weight };
    Kind kind;
    std::vector<VarIndex> vars;    // ranked, largest variable first
    std::vector<Weight> weights;   // parallel to vars for Weight stages
  };

  TermOrder(MonomialOrderSpec spec, std::vector<Stage> stages, std::size_t nvars);

  static std::shared_ptr<const TermOrder> compile(const MonomialOrderSpec& spec, const Ring& ring);

  // Unchecked comparison; both monomials must lie in the order's domain.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool covers(const Monomial& m) const;
  void check_domain(const Monomial& m) const;
  bool in_domain(VarIndex v) const { return domain_[v]; }

  const MonomialOrderSpec& spec() const noexcept { return spec_; }
  const std::vector<Stage>& stages() const noexcept { return stages_; }
  std::string describe() const { return spec_.describe(); }

 private:
  MonomialOrderSpec spec_;
  std::vector<Stage> stages_;
  std::vector<bool> domain_;
};

using OrderPtr = std::shared_ptr<const TermOrder>;

// Checked comparison: throws DomainError when either monomial uses a
// variable the order does not rank.
std::strong_ordering compare(const TermOrder& order, const Monomial& a, const Monomial& b);

// Variable rankings used by the named orders, largest variable first.
std::vector<VarIndex> tau_ranking(const Ring& ring);
std::vector<VarIndex> sigma_ranking(const Ring& ring);
std::vector<VarIndex> delta_ranking(const Ring& ring);

}  // namespace detrees::poly
