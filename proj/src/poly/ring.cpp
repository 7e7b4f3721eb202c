#include "detrees/poly/ring.hpp"

#include "detrees/errors.hpp"

namespace detrees::poly {

Variable Variable::x(int i, int j) {
  if (i < 1 || j < 1) throw DomainError("x indices must be positive");
  Variable v;
  v.family = Family::X;
  v.row = i;
  v.col = j;
  return v;
}

Variable Variable::T(std::vector<int> cols, int k) {
  if (cols.empty()) throw DomainError("T column tuple must be nonempty");
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] < 1 || (i > 0 && cols[i - 1] >= cols[i])) {
      throw DomainError("T column tuple must be strictly increasing positive integers");
    }
  }
  if (k < 1) throw DomainError("T component must be positive");
  Variable v;
  v.family = Family::T;
  v.cols = std::move(cols);
  v.comp = k;
  return v;
}

Variable Variable::t(int i) {
  if (i < 1) throw DomainError("t index must be positive");
  Variable v;
  v.family = Family::Tee;
  v.comp = i;
  return v;
}

std::string Variable::name() const {
  switch (family) {
    case Family::X:
      return "x[" + std::to_string(row) + "," + std::to_string(col) + "]";
    case Family::T: {
      std::string s = "T[";
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i != 0) s += ' ';
        s += std::to_string(cols[i]);
      }
      return s + ";" + std::to_string(comp) + "]";
    }
    case Family::Tee:
      return "t[" + std::to_string(comp) + "]";
  }
  return {};
}

Ring::Ring(Field field, std::vector<Variable> vars) : field_(field), vars_(std::move(vars)) {
  for (VarIndex i = 0; i < vars_.size(); ++i) {
    auto [it, inserted] = lookup_.emplace(vars_[i], i);
    if (!inserted) throw DomainError("duplicate variable " + vars_[i].name());
    by_family_[static_cast<int>(vars_[i].family)].push_back(i);
  }
}

std::optional<VarIndex> Ring::find(const Variable& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

VarIndex Ring::index(const Variable& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) throw DomainError("variable " + v.name() + " is not in the ring");
  return it->second;
}

}  // namespace detrees::poly
