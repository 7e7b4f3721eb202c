#pragma once

#include <string>
#include <vector>

#include "detrees/instance.hpp"
#include "detrees/poly/polynomial.hpp"

namespace detrees::rel {

enum class Kind { ENInitial, ENFull, PluckerInitial, PluckerLifted, ExchangeH };
enum class Ambient { Fiber, Rees };

std::string to_string(Kind kind);
std::string to_string(Ambient ambient);

// A generated relation family. Each relation is monic and sorted under
// `order`; the list is sorted by leading monomial, descending.
struct RelationFamily {
  Kind kind;
  Ambient ambient;
  poly::OrderPtr order;
  std::vector<poly::Polynomial> relations;
};

// Binomials x[i,c_i] T[c\c_i;k] - x[i,c_{i+1}] T[c\c_{i+1};k]. Canonical order
// sigma'. Refused for unit interval instances.
RelationFamily en_initial(const Instance& inst);

// Signed sums of x[i,c_j] T[c\c_j;k] with absent T and x terms dropped and
// zero sums discarded. Canonical order omega'. Refused for unit interval
// instances.
RelationFamily en_full(const Instance& inst, int degree_bound);

// T_a T_b - T_c T_d over non-standard pairs of the index set x [r].
// Canonical order sigma (fiber) or sigma' (Rees). Throws ClosureViolation if
// standardization leaves the index set.
RelationFamily plucker_initial(const Instance& inst, Ambient ambient = Ambient::Fiber);

// Lifted Pluecker relations T_a T_b - T_c T_d + sum lambda T_e T_g with the
// coefficients solved exactly so that the image under T -> minor * t is zero.
// Canonical order omega (fiber) or omega' (Rees). Rees ambient is refused for
// unit interval instances.
RelationFamily plucker_lifted(const Instance& inst, Ambient ambient, int degree_bound);

// One lifted relation; exposed for tests.
poly::Polynomial lift_pair(const Instance& inst, const det::IndexedTuple& a, const det::IndexedTuple& b,
                           const poly::OrderPtr& order);

// Generators of one component ideal and the presentation variable of each.
struct MonomialComponent {
  std::vector<poly::Monomial> gens;
  std::vector<poly::VarIndex> T;
};

// Initial minors of the index set, one component per k in [r].
std::vector<MonomialComponent> initial_components(const Instance& inst);

// Exchange binomials x1 T_j - x2 T_j' with x1 >_tau x2, x1 g_j = x2 g_j' and
// x2 the tau-smallest variable with x1 g_j / x2 in the component ideal.
// Throws PreconditionError when a component is not equigenerated.
RelationFamily exchange_H(const poly::RingPtr& ring, const poly::OrderPtr& order,
                          const std::vector<MonomialComponent>& components);
RelationFamily exchange_H(const Instance& inst);

// Monic form under `order`, zero stays zero.
poly::Polynomial canonical(const poly::Polynomial& f, const poly::OrderPtr& order);

}  // namespace detrees::rel
