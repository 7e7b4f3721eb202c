#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "detrees/determinantal.hpp"
#include "detrees/poly/order.hpp"
#include "detrees/poly/polynomial.hpp"

namespace detrees {

enum class IdealKind { Generic, Ladder, UnitInterval };

struct IdealSpec {
  IdealKind kind = IdealKind::Generic;
  det::LadderSpec ladder;          // Ladder only
  det::UnitIntervalSpec unit;      // UnitInterval only

  static IdealSpec generic() { return {}; }
  static IdealSpec ladder_of(det::LadderSpec spec) { return {IdealKind::Ladder, std::move(spec), {}}; }
  static IdealSpec unit_of(det::UnitIntervalSpec spec) { return {IdealKind::UnitInterval, {}, std::move(spec)}; }
};

std::string to_string(IdealKind kind);

// One problem instance: a matrix shape, an ideal of maximal minors, the
// number r of copies and a coefficient field. Owns the polynomial ring
//   K[x[i,j] : all i,j][T[a;k] : a in the index set, k in [r]][t[1..r]]
// shared by every polynomial produced for the instance.
class Instance {
 public:
  Instance(det::MatrixShape shape, IdealSpec ideal, int r, poly::Field field = poly::Field::rational());

  const det::MatrixShape& shape() const noexcept { return shape_; }
  const IdealSpec& ideal() const noexcept { return ideal_; }
  IdealKind kind() const noexcept { return ideal_.kind; }
  int r() const noexcept { return r_; }
  const poly::RingPtr& ring() const noexcept { return ring_; }
  const poly::Field& field() const { return ring_->field(); }

  // D for the generic kind, L for ladders, U for unit intervals.
  const std::vector<det::ColumnTuple>& index_set() const noexcept { return index_set_; }
  bool in_index_set(const det::ColumnTuple& c) const;
  std::vector<det::IndexedTuple> indexed_tuples() const;
  // Whether x[i,j] is an entry of the (ladder) matrix.
  bool entry_present(int i, int j) const;

  std::vector<poly::Variable> x_vars() const;
  std::vector<poly::Variable> T_vars() const;
  std::vector<poly::Variable> t_vars() const;
  poly::VarIndex T_index(const det::IndexedTuple& a) const;
  poly::Monomial T_monomial(const det::IndexedTuple& a) const;

  const poly::OrderPtr& tau() const noexcept { return tau_; }
  const poly::OrderPtr& sigma() const noexcept { return sigma_; }
  const poly::OrderPtr& tau_prime() const noexcept { return tau_prime_; }
  const poly::OrderPtr& sigma_prime() const noexcept { return sigma_prime_; }
  poly::OrderPtr compile(const poly::MonomialOrderSpec& spec) const;

  // Weight orders realizing the lifted orders on the Rees ring (x and T) and
  // on the fiber ring (T only). A T-variable weighs as the tau-weight of its
  // diagonal monomial, tau being encoded by base-(D+1) positional weights.
  poly::MonomialOrderSpec omega_prime_spec(int degree_bound) const;
  poly::MonomialOrderSpec omega_spec(int degree_bound) const;
  static int weight_base(int degree_bound);

  // Maximal minor of the instance matrix (ladder zeros substituted) under tau.
  const poly::Polynomial& minor(const det::ColumnTuple& c) const;
  poly::Monomial initial_minor(const det::ColumnTuple& c) const;

  // Instance-specific parts of the canonical description, used in hashes.
  std::string describe() const;

 private:
  det::MatrixShape shape_;
  IdealSpec ideal_;
  int r_;
  std::vector<det::ColumnTuple> index_set_;
  poly::RingPtr ring_;
  poly::OrderPtr tau_, sigma_, tau_prime_, sigma_prime_;
  mutable std::mutex mu_;
  mutable std::map<det::ColumnTuple, poly::Polynomial> minors_;
};

// FNV-1a 64-bit hash of the canonical instance description, as 16 hex digits.
std::string instance_hash(const Instance& inst);

}  // namespace detrees
