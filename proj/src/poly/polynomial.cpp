#include "detrees/poly/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "detrees/errors.hpp"

namespace detrees::poly {

Polynomial::Polynomial(RingPtr ring, OrderPtr order) : ring_(std::move(ring)), order_(std::move(order)) {
  if (!ring_ || !order_) throw PreconditionError("polynomial needs a ring and an order");
}

Polynomial Polynomial::from_terms(RingPtr ring, OrderPtr order, std::vector<Term> terms) {
  Polynomial p(std::move(ring), std::move(order));
  const Field& field = p.ring_->field();
  const std::size_t n = p.ring_->size();
  for (Term& t : terms) {
    if (t.mono.size() != n) throw DomainError("monomial from a different ring");
    p.order_->check_domain(t.mono);
    t.coeff = field.reduce(t.coeff);
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return p.order_->greater(a.mono, b.mono); });
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
      if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      continue;
    }
    if (sgn(t.coeff) != 0) p.terms_.push_back(std::move(t));
  }
  return p;
}

Polynomial Polynomial::from_sorted(RingPtr ring, OrderPtr order, std::vector<Term> terms) {
  Polynomial p(std::move(ring), std::move(order));
  p.terms_ = std::move(terms);
  return p;
}

Term Polynomial::take_lead() {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

Polynomial Polynomial::constant(RingPtr ring, OrderPtr order, const Rational& c) {
  const std::size_t n = ring->size();
  return from_terms(std::move(ring), std::move(order), {Term{c, Monomial(n)}});
}

Polynomial Polynomial::monomial(RingPtr ring, OrderPtr order, const Monomial& m, const Rational& c) {
  return from_terms(std::move(ring), std::move(order), {Term{c, m}});
}

Polynomial Polynomial::variable(RingPtr ring, OrderPtr order, const Variable& v) {
  Monomial m = Monomial::variable(ring->size(), ring->index(v));
  return monomial(std::move(ring), std::move(order), m);
}

const Term& Polynomial::lead_term() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

namespace {

std::uint32_t weighted(const Monomial& m, std::span<const std::uint32_t> grading) {
  if (grading.empty()) return m.degree();
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += grading[i] * m[static_cast<VarIndex>(i)];
  return d;
}

}  // namespace

std::uint32_t Polynomial::weighted_degree(std::span<const std::uint32_t> grading) const {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, weighted(t.mono, grading));
  return d;
}

bool Polynomial::is_homogeneous(std::span<const std::uint32_t> grading) const {
  for (const Term& t : terms_) {
    if (weighted(t.mono, grading) != weighted(terms_.front().mono, grading)) return false;
  }
  return true;
}

bool Polynomial::uses_variable(VarIndex v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono[v] != 0; });
}

Polynomial Polynomial::with_order(OrderPtr order) const {
  if (order == order_) return *this;
  return from_terms(ring_, std::move(order), terms_);
}

Polynomial Polynomial::scaled(const Rational& c, const Monomial& m) const {
  Polynomial p(ring_, order_);
  const Field& field = ring_->field();
  Rational cc = field.reduce(c);
  if (sgn(cc) == 0) return p;
  order_->check_domain(m);
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of the terms.
  for (const Term& t : terms_) p.terms_.push_back(Term{field.mul(t.coeff, cc), t.mono * m});
  return p;
}

Polynomial Polynomial::scaled(const Rational& c) const { return scaled(c, Monomial(ring_->size())); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(lead_coeff()));
}

Polynomial Polynomial::operator-() const { return scaled(field().minus_one()); }

void Polynomial::check_compatible(const Polynomial& o) const {
  if (ring_ != o.ring_) throw DomainError("polynomials from different rings");
  if (order_ != o.order_ && order_->describe() != o.order_->describe()) {
    throw DomainError("polynomials carry different term orders");
  }
}

void Polynomial::add_scaled(const Rational& c, const Monomial& m, const Polynomial& g) {
  check_compatible(g);
  const Field& field = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto it = terms_.begin();
  auto jt = g.terms_.begin();
  while (it != terms_.end() || jt != g.terms_.end()) {
    if (jt == g.terms_.end()) {
      out.push_back(std::move(*it++));
      continue;
    }
    Monomial gm = jt->mono * m;
    if (it == terms_.end()) {
      out.push_back(Term{field.mul(c, jt->coeff), std::move(gm)});
      ++jt;
      continue;
    }
    auto cmp = order_->compare(it->mono, gm);
    if (cmp > 0) {
      out.push_back(std::move(*it++));
    } else if (cmp < 0) {
      out.push_back(Term{field.mul(c, jt->coeff), std::move(gm)});
      ++jt;
    } else {
      Rational s = field.add(it->coeff, field.mul(c, jt->coeff));
      if (sgn(s) != 0) out.push_back(Term{std::move(s), std::move(gm)});
      ++it;
      ++jt;
    }
  }
  terms_ = std::move(out);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r.add_scaled(Rational(1), Monomial(a.ring_->size()), b);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r.add_scaled(a.field().minus_one(), Monomial(a.ring_->size()), b);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  const Field& field = a.field();
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) {
      auto [it, inserted] = acc.try_emplace(s.mono * t.mono, field.mul(s.coeff, t.coeff));
      if (!inserted) it->second = field.add(it->second, field.mul(s.coeff, t.coeff));
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back(Term{c, m});
  return Polynomial::from_terms(a.ring_, a.order_, std::move(terms));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
  if (order_ != o.order_ && order_->describe() != o.order_->describe()) {
    for (const Term& t : o.terms_) {
      if (!order_->covers(t.mono)) return false;
    }
    return *this == o.with_order(order_);
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

}  // namespace detrees::poly
