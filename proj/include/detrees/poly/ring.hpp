#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "detrees/poly/field.hpp"

namespace detrees::poly {

// Variable families: matrix entries x[i,j], presentation variables T[c;k]
// and the auxiliary Rees variables t[k].
enum class Family : std::uint8_t { X = 0, T = 1, Tee = 2 };

struct Variable {
  Family family = Family::X;
  int row = 0;             // X: row index i
  int col = 0;             // X: column index j
  std::vector<int> cols;   // T: strictly increasing column tuple
  int comp = 0;            // T: component k; Tee: index i

  static Variable x(int i, int j);
  static Variable T(std::vector<int> cols, int k);
  static Variable t(int i);

  std::string name() const;

  auto operator<=>(const Variable&) const = default;
  bool operator==(const Variable&) const = default;
};

using VarIndex = std::uint32_t;

// A polynomial ring: a coefficient field plus a fixed enumeration of
// variables. Monomials are dense exponent vectors indexed by this
// enumeration, so every polynomial of one problem instance shares a ring.
class Ring {
 public:
  Ring(Field field, std::vector<Variable> vars);

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return vars_.size(); }
  const Variable& var(VarIndex v) const { return vars_.at(v); }
  const std::vector<Variable>& vars() const noexcept { return vars_; }

  std::optional<VarIndex> find(const Variable& v) const;
  // Throws DomainError when the variable is not part of the ring.
  VarIndex index(const Variable& v) const;

  const std::vector<VarIndex>& family(Family f) const { return by_family_[static_cast<int>(f)]; }

 private:
  Field field_;
  std::vector<Variable> vars_;
  std::map<Variable, VarIndex> lookup_;
  std::vector<VarIndex> by_family_[3];
};

using RingPtr = std::shared_ptr<const Ring>;

}  // namespace detrees::poly
