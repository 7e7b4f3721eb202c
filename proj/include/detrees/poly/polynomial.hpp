#pragma once

#include <span>
#include <vector>

#include "detrees/poly/field.hpp"
#include "detrees/poly/monomial.hpp"
#include "detrees/poly/order.hpp"
#include "detrees/poly/ring.hpp"

namespace detrees::poly {

struct Term {
  Rational coeff;
  Monomial mono;
};

// Sparse polynomial over a ring, with terms kept strictly descending under
// an attached term order and no zero coefficients. The representation is
// canonical for a given (ring, order).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(RingPtr ring, OrderPtr order);

  // Combines like terms, reduces coefficients into the field, drops zeros and
  // sorts. Throws DomainError if a monomial leaves the order's domain.
  static Polynomial from_terms(RingPtr ring, OrderPtr order, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, OrderPtr order, const Rational& c);
  static Polynomial monomial(RingPtr ring, OrderPtr order, const Monomial& m, const Rational& c = 1);
  static Polynomial variable(RingPtr ring, OrderPtr order, const Variable& v);

  const RingPtr& ring() const noexcept { return ring_; }
  const OrderPtr& order() const noexcept { return order_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  const Term& lead_term() const;
  const Monomial& lead_monomial() const { return lead_term().mono; }
  const Rational& lead_coeff() const { return lead_term().coeff; }

  std::uint32_t total_degree() const;
  // Largest weighted degree of a term; grading is indexed by variable.
  std::uint32_t weighted_degree(std::span<const std::uint32_t> grading) const;
  bool is_homogeneous(std::span<const std::uint32_t> grading) const;
  bool uses_variable(VarIndex v) const;

  Polynomial with_order(OrderPtr order) const;
  Polynomial scaled(const Rational& c, const Monomial& m) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial monic() const;
  // Multiplies by -1 when the leading coefficient is -1 (or, more generally,
  // divides by the leading coefficient); zero stays zero.
  Polynomial normalized() const { return monic(); }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  // this += c * m * g, in place.
  void add_scaled(const Rational& c, const Monomial& m, const Polynomial& g);

  // Removes and returns the leading term.
  Term take_lead();
  // Builds a polynomial from terms already strictly descending under `order`
  // with nonzero reduced coefficients. No validation beyond a debug check.
  static Polynomial from_sorted(RingPtr ring, OrderPtr order, std::vector<Term> terms);

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  void check_compatible(const Polynomial& o) const;

  RingPtr ring_;
  OrderPtr order_;
  std::vector<Term> terms_;
};

}  // namespace detrees::poly
