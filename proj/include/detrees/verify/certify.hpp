#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detrees/instance.hpp"
#include "detrees/poly/polynomial.hpp"
#include "detrees/verify/certificate.hpp"
#include "detrees/verify/maps.hpp"
#include "detrees/verify/oracle.hpp"

namespace detrees::verify {

// Groebner certificate in three parts:
//   membership    every claimed element maps to zero under the map
//   closure       every S-pair reduces to zero modulo the claimed set
//   completeness  every oracle generator reduces to zero modulo the claimed set
// A null or incomplete oracle leaves completeness skipped or inconclusive.
Certificate certify_groebner(const Instance& inst, const std::string& claim, const std::vector<poly::Polynomial>& claimed,
                             const poly::OrderPtr& order, MapKind map, const OracleResult* oracle);

// Both oracles describe the same ideal up to `degree_bound`: the enumerated
// generators reduce to zero modulo the eliminated basis, and the eliminated
// generators of degree at most the bound reduce to zero modulo a truncated
// basis of the enumerated ones.
Certificate certify_oracle_agreement(const OracleResult& elimination, const OracleResult& enumeration,
                                     const poly::OrderPtr& order, int degree_bound);

// Subalgebra generator: the presentation variable, its image, and a tag
// grouping generators of the same multidegree (0 for the x variables,
// k for t[k]).
struct SubalgebraGenerator {
  poly::VarIndex var;
  poly::Polynomial image;
  int tag;
};

std::vector<SubalgebraGenerator> sagbi_generators(const Instance& inst, bool with_x);

struct SubductionResult {
  poly::Polynomial residue;
  std::size_t steps = 0;
  bool exhausted = false;
};

// Repeatedly cancels the leading term of f by a product of generators whose
// leading monomials multiply to it. Stops at zero, at a leading monomial that
// does not factor, or after max_steps.
class Subductor {
 public:
  Subductor(std::vector<poly::Polynomial> gens, poly::OrderPtr order);

  // Exponent vector over the generators whose leading monomials multiply to m.
  std::optional<std::vector<std::uint32_t>> factor(const poly::Monomial& m) const;
  poly::Polynomial product(const std::vector<std::uint32_t>& exps) const;
  SubductionResult operator()(poly::Polynomial f, std::size_t max_steps = 100000) const;

 private:
  using FailMemo = std::map<poly::Monomial, std::size_t, poly::MonomialKeyLess>;
  bool search(const poly::Monomial& rest, std::size_t from, std::vector<std::uint32_t>& exps, FailMemo& failed) const;

  std::vector<poly::Polynomial> gens_;
  poly::OrderPtr order_;
  std::vector<std::size_t> linear_;    // generators whose leading monomial is a variable
  std::vector<std::size_t> others_;
  std::vector<long> linear_of_var_;    // variable -> generator, or -1
};

poly::Polynomial subduct(const poly::Polynomial& f, const std::vector<poly::Polynomial>& gens,
                         const poly::OrderPtr& order);

// Two-part SAGBI certificate under the ambient order:
//   lifting    the image of every toric relation subducts to zero
//   initial    in every graded piece with at most degree_bound generator
//              factors, the leading monomials of the span are exactly the
//              products of leading monomials of the generators
Certificate certify_sagbi(const std::string& claim, const std::vector<SubalgebraGenerator>& gens,
                          const std::vector<poly::Polynomial>& toric, const poly::OrderPtr& ambient, int degree_bound);

// Bounded check of the strong l-exchange property for equigenerated
// monomial ideals, one generator list per component. Every product u of
// generators of multidegree gamma with |gamma| <= gamma_bound is tested
// against every product v of the same multidegree.
Certificate check_l_exchange(const poly::Ring& ring, const std::vector<std::vector<poly::Monomial>>& components,
                             int gamma_bound);

// Generators of the initial ideals, one list per t component.
std::vector<std::vector<poly::Monomial>> initial_generators(const Instance& inst);

// Closure of the nonzero maximal minors under tau and under `probes`
// random lex orders drawn from `seed`.
Certificate certify_minors_groebner(const Instance& inst, std::size_t probes, std::uint64_t seed);

}  // namespace detrees::verify
