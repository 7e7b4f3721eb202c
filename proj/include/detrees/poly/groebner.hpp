#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "detrees/poly/polynomial.hpp"

namespace detrees::poly {

// Multivariate division of f by G. Every polynomial is first re-sorted under
// `order`. The remainder has no term divisible by a leading monomial of G.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> G, const OrderPtr& order);
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const OrderPtr& order);

// Standard S-polynomial; throws PreconditionError on a zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const OrderPtr& order);

struct GroebnerOptions {
  // S-pairs whose sugar degree exceeds the bound are not processed; the
  // result is then flagged incomplete.
  std::optional<std::uint32_t> degree_bound;
  // Weighted degree used for sugar and the bound, one entry per ring variable.
  // Empty means standard total degree.
  std::vector<std::uint32_t> grading;
  // Return the reduced basis rather than the raw accumulated one.
  bool reduce = true;
};

struct GroebnerResult {
  std::vector<Polynomial> basis;
  bool complete = true;
  std::size_t pairs_reduced = 0;
  std::size_t pairs_deferred = 0;
};

// Buchberger's algorithm with normal selection by sugar degree and the
// Gebauer-Moeller installation of the product and chain criteria. Ties are
// broken by the lcm under the term order, then by pair indices, so the output
// is a deterministic function of the input list.
GroebnerResult buchberger(std::span<const Polynomial> G, const OrderPtr& order, const GroebnerOptions& opts = {});

struct EliminationResult {
  // Generators of (G) intersected with the subring without the killed
  // variables, as a Groebner basis under the tiebreak order.
  std::vector<Polynomial> generators;
  bool complete = true;
  std::size_t pairs_reduced = 0;
};

EliminationResult eliminate(std::span<const Polynomial> G, const std::vector<Variable>& kill,
                            const MonomialOrderSpec& tiebreak, const GroebnerOptions& opts = {});

// Returns the first S-pair (i, j) of G whose S-polynomial does not reduce to
// zero modulo G, together with its nonzero remainder. Pairs with coprime
// leading monomials are skipped (product criterion).
struct PairFailure {
  std::size_t i;
  std::size_t j;
  Polynomial remainder;
};
std::optional<PairFailure> first_failing_pair(std::span<const Polynomial> G, const OrderPtr& order);

}  // namespace detrees::poly
