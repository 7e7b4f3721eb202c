#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detrees/instance.hpp"
#include "detrees/poly/polynomial.hpp"
#include "detrees/verify/maps.hpp"

namespace detrees::verify {

struct OracleOptions {
  int degree_bound = 4;
  // Largest number of T variables (|index set| * r) the elimination oracle accepts.
  std::size_t cap = 30;
  // Optional sugar bound for the elimination run, in the grading x:1, t:1, T:n+1.
  std::optional<std::uint32_t> sugar_bound;
};

struct OracleResult {
  std::vector<poly::Polynomial> generators;
  bool complete = true;
  std::string exhausted;   // names the bound that stopped the run
  std::string method;
  std::size_t pairs = 0;
};

// Kernel of the map var -> image by eliminating `kill` from (var - image).
// `grading` makes the input homogeneous; the generators come back sorted
// under `order`, whose domain must avoid the killed variables.
OracleResult kernel_by_elimination(const std::vector<ImageOf>& gens, const std::vector<poly::Variable>& kill,
                                   const std::vector<std::uint32_t>& grading, const poly::OrderPtr& order,
                                   std::optional<std::uint32_t> sugar_bound = std::nullopt);

// Kernel of a monomial map up to degree `degree_bound`: every monomial in the
// variables is grouped by image and each fiber contributes binomials. Only
// binomials not already in the ideal of lower ones are returned.
OracleResult kernel_by_enumeration(const poly::RingPtr& ring, const std::vector<poly::VarIndex>& vars,
                                   const std::vector<poly::Monomial>& images,
                                   const poly::OrderPtr& order, int degree_bound);

enum class FiberMethod { Elimination, Enumeration };

// ker(psi) (Actual) or ker(psi*) (Initial) in the T variables.
OracleResult fiber_kernel_oracle(const Instance& inst, MapKind kind, FiberMethod method, const poly::OrderPtr& order,
                                 const OracleOptions& opts = {});
// ker(phi) (Actual) or ker(phi*) (Initial) in the x and T variables.
OracleResult rees_kernel_oracle(const Instance& inst, MapKind kind, const poly::OrderPtr& order,
                                const OracleOptions& opts = {});

std::string to_string(FiberMethod m);

}  // namespace detrees::verify
