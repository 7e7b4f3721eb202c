#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace detrees::poly {

using Rational = mpq_class;

// Coefficient field: the rationals, or Z/p for a prime p. Prime-field
// elements are stored as canonical integer representatives in [0, p).
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  static Field rational() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_prime() const noexcept { return p_ != 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  // Canonical representative of an arbitrary rational in this field.
  Rational reduce(const Rational& a) const;

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  // The element "-1", i.e. p-1 over a prime field.
  Rational minus_one() const { return neg(Rational(1)); }

  bool operator==(const Field& o) const noexcept { return p_ == o.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}

  std::uint64_t to_residue(const Rational& a) const;

  std::uint32_t p_;
};

}  // namespace detrees::poly
