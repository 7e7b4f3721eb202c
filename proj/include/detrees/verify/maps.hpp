#pragma once

#include <string>
#include <vector>

#include "detrees/instance.hpp"
#include "detrees/poly/polynomial.hpp"

namespace detrees::verify {

// Actual: T[a;k] -> minor(a) t[k] (the Rees map). Initial: T[a;k] -> the
// diagonal monomial of a times t[k]. The x variables are fixed.
enum class MapKind { Initial, Actual };

std::string to_string(MapKind kind);

// One presentation generator: the variable and the polynomial it maps to.
struct ImageOf {
  poly::VarIndex var;
  poly::Polynomial image;
};

// Ring endomorphism given on a set of variables; the other variables are
// fixed. Images are sorted under one target order.
class Substitution {
 public:
  Substitution(const Instance& inst, MapKind kind);
  Substitution(poly::RingPtr ring, poly::OrderPtr target, const std::vector<ImageOf>& images);

  poly::Polynomial operator()(const poly::Polynomial& f) const;
  const poly::Polynomial& image(poly::VarIndex v) const { return images_.at(v); }
  const std::vector<ImageOf>& generators() const noexcept { return gens_; }
  const poly::OrderPtr& target() const noexcept { return target_; }

 private:
  poly::RingPtr ring_;
  poly::OrderPtr target_;
  std::vector<ImageOf> gens_;
  std::vector<poly::Polynomial> images_;   // indexed by ring variable
  std::vector<bool> defined_;
};

// T[a;k] -> (minor or initial minor of a) * t[k], for every T variable.
std::vector<ImageOf> presentation_images(const Instance& inst, MapKind kind);

}  // namespace detrees::verify
