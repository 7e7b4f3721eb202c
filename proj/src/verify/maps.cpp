#include "detrees/verify/maps.hpp"

#include "detrees/errors.hpp"

namespace detrees::verify {

using poly::Monomial;
using poly::Polynomial;

std::string to_string(MapKind kind) { return kind == MapKind::Initial ? "initial" : "actual"; }

std::vector<ImageOf> presentation_images(const Instance& inst, MapKind kind) {
  const auto& R = *inst.ring();
  std::vector<ImageOf> out;
  for (const det::IndexedTuple& a : inst.indexed_tuples()) {
    Monomial t = Monomial::variable(R.size(), R.index(poly::Variable::t(a.comp)));
    poly::VarIndex v = inst.T_index(a);
    if (kind == MapKind::Initial) {
      out.push_back({v, Polynomial::monomial(inst.ring(), inst.tau_prime(), inst.initial_minor(a.cols) * t)});
    } else {
      out.push_back({v, inst.minor(a.cols).with_order(inst.tau_prime()).scaled(poly::Rational(1), t)});
    }
  }
  return out;
}

Substitution::Substitution(const Instance& inst, MapKind kind)
    : Substitution(inst.ring(), inst.tau_prime(), presentation_images(inst, kind)) {}

Substitution::Substitution(poly::RingPtr ring, poly::OrderPtr target, const std::vector<ImageOf>& images)
    : ring_(std::move(ring)), target_(std::move(target)), gens_(images) {
  images_.reserve(ring_->size());
  for (poly::VarIndex v = 0; v < ring_->size(); ++v) images_.emplace_back(ring_, target_);
  defined_.assign(ring_->size(), false);
  for (ImageOf& g : gens_) {
    g.image = g.image.with_order(target_);
    images_[g.var] = g.image;
    defined_[g.var] = true;
  }
  for (poly::VarIndex v = 0; v < ring_->size(); ++v) {
    if (!defined_[v] && target_->covers(Monomial::variable(ring_->size(), v))) {
      images_[v] = Polynomial::monomial(ring_, target_, Monomial::variable(ring_->size(), v));
      defined_[v] = true;
    }
  }
}

Polynomial Substitution::operator()(const Polynomial& f) const {
  Polynomial out(ring_, target_);
  const Monomial one(ring_->size());
  for (const auto& term : f.terms()) {
    Polynomial acc = Polynomial::constant(ring_, target_, term.coeff);
    for (poly::VarIndex v = 0; v < ring_->size(); ++v) {
      if (term.mono[v] == 0) continue;
      if (!defined_[v]) throw DomainError("no image for variable " + ring_->var(v).name());
      for (int i = 0; i < term.mono[v]; ++i) acc = acc * images_[v];
    }
    out.add_scaled(poly::Rational(1), one, acc);
  }
  return out;
}

}  // namespace detrees::verify
