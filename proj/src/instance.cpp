#include "detrees/instance.hpp"

#include <algorithm>
#include <cstdio>

#include "detrees/errors.hpp"

namespace detrees {

using poly::MonomialOrderSpec;
using poly::Variable;

std::string to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::Generic:
      return "generic";
    case IdealKind::Ladder:
      return "ladder";
    case IdealKind::UnitInterval:
      return "unit_interval";
  }
  return {};
}

Instance::Instance(det::MatrixShape shape, IdealSpec ideal, int r, poly::Field field)
    : shape_(shape), ideal_(std::move(ideal)), r_(r) {
  shape_.validate();
  if (r_ < 1) throw DomainError("r must be at least 1");
  switch (ideal_.kind) {
    case IdealKind::Generic:
      index_set_ = det::enumerate_D(shape_);
      break;
    case IdealKind::Ladder:
      ideal_.ladder.validate();
      if (ideal_.ladder.shape().n != shape_.n || ideal_.ladder.shape().m != shape_.m) {
        throw DomainError("ladder rows do not match the matrix shape (need n rows and k_n = m)");
      }
      index_set_ = det::ladder_index_set(ideal_.ladder);
      break;
    case IdealKind::UnitInterval:
      ideal_.unit.validate(shape_);
      index_set_ = det::unit_index_set(ideal_.unit, shape_);
      break;
  }
  std::vector<Variable> vars;
  for (int i = 1; i <= shape_.n; ++i)
    for (int j = 1; j <= shape_.m; ++j) vars.push_back(Variable::x(i, j));
  for (const auto& c : index_set_)
    for (int k = 1; k <= r_; ++k) vars.push_back(Variable::T(c, k));
  for (int k = 1; k <= r_; ++k) vars.push_back(Variable::t(k));
  ring_ = std::make_shared<poly::Ring>(field, std::move(vars));
  tau_ = poly::TermOrder::compile(MonomialOrderSpec::tau(), *ring_);
  sigma_ = poly::TermOrder::compile(MonomialOrderSpec::sigma(), *ring_);
  tau_prime_ = poly::TermOrder::compile(MonomialOrderSpec::tau_prime(), *ring_);
  sigma_prime_ = poly::TermOrder::compile(MonomialOrderSpec::sigma_prime(), *ring_);
}

bool Instance::in_index_set(const det::ColumnTuple& c) const {
  return std::binary_search(index_set_.begin(), index_set_.end(), c);
}

std::vector<det::IndexedTuple> Instance::indexed_tuples() const {
  std::vector<det::IndexedTuple> out;
  for (const auto& c : index_set_)
    for (int k = 1; k <= r_; ++k) out.push_back({c, k});
  return out;
}

bool Instance::entry_present(int i, int j) const {
  if (i < 1 || i > shape_.n || j < 1 || j > shape_.m) return false;
  return ideal_.kind != IdealKind::Ladder || ideal_.ladder.entry_present(i, j);
}

std::vector<Variable> Instance::x_vars() const {
  std::vector<Variable> out;
  for (auto v : ring_->family(poly::Family::X)) out.push_back(ring_->var(v));
  return out;
}

std::vector<Variable> Instance::T_vars() const {
  std::vector<Variable> out;
  for (auto v : ring_->family(poly::Family::T)) out.push_back(ring_->var(v));
  return out;
}

std::vector<Variable> Instance::t_vars() const {
  std::vector<Variable> out;
  for (auto v : ring_->family(poly::Family::Tee)) out.push_back(ring_->var(v));
  return out;
}

poly::VarIndex Instance::T_index(const det::IndexedTuple& a) const { return ring_->index(Variable::T(a.cols, a.comp)); }

poly::Monomial Instance::T_monomial(const det::IndexedTuple& a) const {
  return poly::Monomial::variable(ring_->size(), T_index(a));
}

poly::OrderPtr Instance::compile(const MonomialOrderSpec& spec) const { return poly::TermOrder::compile(spec, *ring_); }

int Instance::weight_base(int degree_bound) { return std::max(degree_bound, 4) + 1; }

namespace {

std::vector<std::pair<Variable, poly::Weight>> x_weights(const poly::Ring& ring, int base) {
  std::vector<poly::VarIndex> rank = poly::tau_ranking(ring);
  std::vector<std::pair<Variable, poly::Weight>> out;
  poly::Weight w = 1;
  for (auto it = rank.rbegin(); it != rank.rend(); ++it) {
    out.emplace_back(ring.var(*it), w);
    w *= base;
  }
  return out;
}

poly::Weight diagonal_weight(const std::vector<std::pair<Variable, poly::Weight>>& xw, const det::ColumnTuple& c) {
  poly::Weight w = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Variable v = Variable::x(static_cast<int>(i) + 1, c[i]);
    for (const auto& [x, wx] : xw) {
      if (x == v) w += wx;
    }
  }
  return w;
}

}  // namespace

MonomialOrderSpec Instance::omega_prime_spec(int degree_bound) const {
  const int base = weight_base(degree_bound);
  auto xw = x_weights(*ring_, base);
  std::vector<std::pair<Variable, poly::Weight>> weights = xw;
  for (const Variable& T : T_vars()) weights.emplace_back(T, diagonal_weight(xw, T.cols));
  return MonomialOrderSpec::weight_refined(std::move(weights), "tau-diagonal base " + std::to_string(base),
                                           MonomialOrderSpec::sigma_prime());
}

MonomialOrderSpec Instance::omega_spec(int degree_bound) const {
  const int base = weight_base(degree_bound);
  auto xw = x_weights(*ring_, base);
  std::vector<std::pair<Variable, poly::Weight>> weights;
  for (const Variable& T : T_vars()) weights.emplace_back(T, diagonal_weight(xw, T.cols));
  return MonomialOrderSpec::weight_refined(std::move(weights), "tau-diagonal base " + std::to_string(base),
                                           MonomialOrderSpec::sigma());
}

const poly::Polynomial& Instance::minor(const det::ColumnTuple& c) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = minors_.find(c);
  if (it != minors_.end()) return it->second;
  const det::LadderSpec* ladder = ideal_.kind == IdealKind::Ladder ? &ideal_.ladder : nullptr;
  poly::Polynomial p = det::minor(ring_, tau_, shape_, ladder, c);
  return minors_.emplace(c, std::move(p)).first->second;
}

poly::Monomial Instance::initial_minor(const det::ColumnTuple& c) const { return det::initial_minor(*ring_, c); }

std::string Instance::describe() const {
  std::string s = "n=" + std::to_string(shape_.n) + " m=" + std::to_string(shape_.m) + " r=" + std::to_string(r_) +
                  " ideal=" + to_string(ideal_.kind);
  auto intervals = [](const std::vector<det::Interval>& v) {
    std::string out;
    for (const auto& I : v) out += " [" + std::to_string(I.lo) + "," + std::to_string(I.hi) + "]";
    return out;
  };
  if (ideal_.kind == IdealKind::Ladder) s += intervals(ideal_.ladder.rows);
  if (ideal_.kind == IdealKind::UnitInterval) s += intervals(ideal_.unit.intervals);
  return s + " field=" + field().name();
}

std::string instance_hash(const Instance& inst) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : inst.describe()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace detrees
