#include "detrees/poly/monomial.hpp"

#include <algorithm>
#include <limits>

#include "detrees/errors.hpp"

namespace detrees::poly {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) { recompute(); }

Monomial Monomial::variable(std::size_t nvars, VarIndex v, Exponent e) {
  if (v >= nvars) throw DomainError("variable index out of range");
  Monomial m(nvars);
  m.set(v, e);
  return m;
}

void Monomial::set(VarIndex v, Exponent e) {
  if (v >= exps_.size()) throw DomainError("variable index out of range");
  exps_[v] = e;
  recompute();
}

void Monomial::recompute() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) {
      degree_ += exps_[i];
      mask_ |= std::uint64_t{1} << (i & 63U);
    }
  }
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_ || (mask_ & ~other.mask_) != 0) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  if ((mask_ & other.mask_) == 0) return true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw DomainError("monomials from different rings");
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint32_t e = std::uint32_t{a.exps_[i]} + b.exps_[i];
    if (e > std::numeric_limits<Monomial::Exponent>::max()) throw DomainError("exponent overflow");
    r.exps_[i] = static_cast<Monomial::Exponent>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  r.mask_ = a.mask_ | b.mask_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw DomainError("monomials from different rings");
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b.exps_[i] > a.exps_[i]) throw DomainError("monomial quotient is not exact");
    r.exps_[i] = static_cast<Monomial::Exponent>(a.exps_[i] - b.exps_[i]);
  }
  r.recompute();
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw DomainError("monomials from different rings");
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.recompute();
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace detrees::poly
