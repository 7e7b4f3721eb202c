#pragma once

#include <compare>
#include <string>
#include <vector>

#include "detrees/poly/polynomial.hpp"

namespace detrees::det {

using ColumnTuple = std::vector<int>;

// An element of D x [r]: a column tuple together with a component index.
struct IndexedTuple {
  ColumnTuple cols;
  int comp = 1;

  auto operator<=>(const IndexedTuple&) const = default;
  bool operator==(const IndexedTuple&) const = default;
};

struct MatrixShape {
  int n = 0;
  int m = 0;

  // Throws DomainError unless 1 <= n <= m.
  void validate() const;
};

struct Interval {
  int lo = 0;
  int hi = 0;

  bool contains(int j) const { return lo <= j && j <= hi; }
  bool operator==(const Interval&) const = default;
};

// Row supports S_i = [l_i, k_i] of a two-sided ladder matrix.
struct LadderSpec {
  std::vector<Interval> rows;

  static LadderSpec full(const MatrixShape& shape);
  MatrixShape shape() const;
  // Throws DomainError naming the violated inequality.
  void validate() const;
  bool entry_present(int i, int j) const { return rows.at(i - 1).contains(j); }
};

// Column intervals I_1, ..., I_s of a unit interval determinantal ideal.
struct UnitIntervalSpec {
  std::vector<Interval> intervals;

  // Throws DomainError naming the violated condition.
  void validate(const MatrixShape& shape) const;
};

// All strictly increasing n-tuples in [m], lexicographically ascending,
// which is descending in tau on their diagonal monomials.
std::vector<ColumnTuple> enumerate_D(const MatrixShape& shape);
std::vector<ColumnTuple> ladder_index_set(const LadderSpec& spec);
std::vector<ColumnTuple> unit_index_set(const UnitIntervalSpec& spec, const MatrixShape& shape);

bool is_column_tuple(const ColumnTuple& c, const MatrixShape& shape);

// Determinant of the columns `tuple` of the generic matrix, or of the ladder
// matrix when `ladder` is given. Computed by cofactor expansion along the
// sparsest remaining row. The ring must contain every x[i,j] that occurs.
poly::Polynomial minor(const poly::RingPtr& ring, const poly::OrderPtr& order, const MatrixShape& shape,
                       const LadderSpec* ladder, const ColumnTuple& tuple);

// The diagonal monomial x[1,c_1] ... x[n,c_n].
poly::Monomial initial_minor(const poly::Ring& ring, const ColumnTuple& tuple);

std::string to_string(const ColumnTuple& c);
std::string to_string(const IndexedTuple& a);

}  // namespace detrees::det
