#include "detrees/poly/field.hpp"

#include "detrees/errors.hpp"

namespace detrees::poly {
namespace {

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e != 0) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

std::uint64_t mpz_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime_number(p) || p > (1U << 31U)) {
    throw PreconditionError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
  return Field(p);
}

std::string Field::name() const { return is_prime() ? "GF(" + std::to_string(p_) + ")" : "QQ"; }

std::uint64_t Field::to_residue(const Rational& a) const {
  std::uint64_t num = mpz_mod(a.get_num(), p_);
  std::uint64_t den = mpz_mod(a.get_den(), p_);
  if (den == 0) throw DomainError("denominator vanishes modulo " + std::to_string(p_));
  if (den == 1) return num;
  return num * pow_mod(den, p_ - 2, p_) % p_;
}

Rational Field::reduce(const Rational& a) const {
  if (!is_prime()) return a;
  return Rational(static_cast<unsigned long>(to_residue(a)));
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (!is_prime()) return a + b;
  std::uint64_t s = a.get_num().get_ui() + b.get_num().get_ui();
  return Rational(static_cast<unsigned long>(s % p_));
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (!is_prime()) return a - b;
  std::uint64_t s = a.get_num().get_ui() + p_ - b.get_num().get_ui();
  return Rational(static_cast<unsigned long>(s % p_));
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (!is_prime()) return a * b;
  std::uint64_t s = a.get_num().get_ui() * b.get_num().get_ui();
  return Rational(static_cast<unsigned long>(s % p_));
}

Rational Field::neg(const Rational& a) const {
  if (!is_prime()) return -a;
  std::uint64_t v = a.get_num().get_ui();
  return Rational(static_cast<unsigned long>(v == 0 ? 0 : p_ - v));
}

Rational Field::inv(const Rational& a) const {
  if (sgn(a) == 0) throw DomainError("division by zero in " + name());
  if (!is_prime()) return 1 / a;
  return Rational(static_cast<unsigned long>(pow_mod(a.get_num().get_ui(), p_ - 2, p_)));
}

}  // namespace detrees::poly
