#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "detrees/poly/ring.hpp"

namespace detrees::poly {

// Dense exponent vector over a ring's variable enumeration.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, VarIndex v, Exponent e = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](VarIndex v) const { return exps_[v]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  // Bit i is set when some variable with index = i (mod 64) occurs.
  std::uint64_t support_mask() const noexcept { return mask_; }

  void set(VarIndex v, Exponent e);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Exact quotient; throws DomainError when b does not divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const noexcept { return degree_ == o.degree_ && exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const noexcept { return !(*this == o); }

  // Plain lexicographic comparison of exponent vectors; only for use as a
  // container key, not a monomial order.
  bool key_less(const Monomial& o) const noexcept { return exps_ < o.exps_; }

  std::size_t hash() const noexcept;

 private:
  void recompute();

  std::vector<Exponent> exps_;
  std::uint32_t degree_ = 0;
  std::uint64_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct MonomialKeyLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return a.key_less(b); }
};

}  // namespace detrees::poly
