#include "detrees/determinantal.hpp"

#include <algorithm>

#include "detrees/errors.hpp"

namespace detrees::det {

using poly::Monomial;
using poly::Polynomial;
using poly::Term;
using poly::Variable;

void MatrixShape::validate() const {
  if (n < 1) throw DomainError("matrix shape needs n >= 1");
  if (n > m) throw DomainError("matrix shape needs n <= m");
  if (m > 64) throw DomainError("matrix shape too large (m > 64)");
}

LadderSpec LadderSpec::full(const MatrixShape& shape) {
  shape.validate();
  return LadderSpec{std::vector<Interval>(shape.n, Interval{1, shape.m})};
}

MatrixShape LadderSpec::shape() const {
  if (rows.empty()) return {};
  return MatrixShape{static_cast<int>(rows.size()), rows.back().hi};
}

void LadderSpec::validate() const {
  if (rows.empty()) throw DomainError("ladder needs at least one row");
  const int n = static_cast<int>(rows.size());
  const int m = rows.back().hi;
  shape().validate();
  auto fail = [](const std::string& what) { throw DomainError("ladder violates " + what); };
  if (rows.front().lo != 1) fail("l_1 = 1");
  for (int i = 0; i < n; ++i) {
    const std::string idx = std::to_string(i + 1);
    if (rows[i].lo >= rows[i].hi) fail("l_" + idx + " < k_" + idx);
    if (i > 0 && rows[i - 1].lo > rows[i].lo) fail("l_" + std::to_string(i) + " <= l_" + idx);
    if (i > 0 && rows[i - 1].hi > rows[i].hi) fail("k_" + std::to_string(i) + " <= k_" + idx);
  }
  if (rows.back().lo >= m) fail("l_n < m");
  if (rows.front().hi <= 1) fail("1 < k_1");
  if (ladder_index_set(*this).empty()) throw DomainError("ladder has no nonzero maximal minor");
}

void UnitIntervalSpec::validate(const MatrixShape& shape) const {
  shape.validate();
  if (intervals.empty()) throw DomainError("unit interval ideal needs at least one interval");
  auto fail = [](const std::string& what) { throw DomainError("unit intervals violate " + what); };
  const std::size_t s = intervals.size();
  for (std::size_t i = 0; i < s; ++i) {
    if (intervals[i].lo >= intervals[i].hi) fail("u_i < v_i for interval " + std::to_string(i + 1));
  }
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = 0; b < s; ++b) {
      if (a != b && intervals[a].lo <= intervals[b].lo && intervals[b].hi <= intervals[a].hi) {
        fail("irredundance: interval " + std::to_string(b + 1) + " is contained in interval " + std::to_string(a + 1));
      }
    }
  }
  if (intervals.front().lo != 1) fail("u_1 = 1");
  if (intervals.back().hi != shape.m) fail("v_s = m");
  if (intervals.back().lo >= shape.m) fail("u_s < m");
  if (intervals.front().hi <= 1) fail("1 < v_1");
  for (std::size_t i = 1; i < s; ++i) {
    const std::string a = std::to_string(i), b = std::to_string(i + 1);
    if (intervals[i - 1].lo >= intervals[i].lo) fail("u_" + a + " < u_" + b);
    if (intervals[i - 1].hi >= intervals[i].hi) fail("v_" + a + " < v_" + b);
    if (intervals[i].lo > intervals[i - 1].hi + 1) fail("covering of [1,m] between intervals " + a + " and " + b);
  }
  if (unit_index_set(*this, shape).empty()) throw DomainError("unit interval ideal has no maximal minor");
}

namespace {

void tuples(int n, int m, ColumnTuple& cur, std::vector<ColumnTuple>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  int start = cur.empty() ? 1 : cur.back() + 1;
  int remaining = n - static_cast<int>(cur.size());
  for (int c = start; c + remaining - 1 <= m; ++c) {
    cur.push_back(c);
    tuples(n, m, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ColumnTuple> enumerate_D(const MatrixShape& shape) {
  shape.validate();
  std::vector<ColumnTuple> out;
  ColumnTuple cur;
  tuples(shape.n, shape.m, cur, out);
  return out;
}

std::vector<ColumnTuple> ladder_index_set(const LadderSpec& spec) {
  std::vector<ColumnTuple> out;
  for (ColumnTuple& a : enumerate_D(spec.shape())) {
    bool ok = true;
    for (int i = 0; i < static_cast<int>(a.size()) && ok; ++i) ok = spec.rows[i].contains(a[i]);
    if (ok) out.push_back(std::move(a));
  }
  return out;
}

std::vector<ColumnTuple> unit_index_set(const UnitIntervalSpec& spec, const MatrixShape& shape) {
  std::vector<ColumnTuple> out;
  for (ColumnTuple& a : enumerate_D(shape)) {
    bool ok = std::any_of(spec.intervals.begin(), spec.intervals.end(),
                          [&](const Interval& I) { return I.contains(a.front()) && I.contains(a.back()); });
    if (ok) out.push_back(std::move(a));
  }
  return out;
}

bool is_column_tuple(const ColumnTuple& c, const MatrixShape& shape) {
  if (static_cast<int>(c.size()) != shape.n) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1 || c[i] > shape.m) return false;
    if (i > 0 && c[i - 1] >= c[i]) return false;
  }
  return true;
}

namespace {

struct Expansion {
  const poly::Ring& ring;
  const MatrixShape& shape;
  const LadderSpec* ladder;
  const ColumnTuple& tuple;
  std::vector<Term> terms;

  bool present(int row, int col) const { return !ladder || ladder->entry_present(row, col); }

  // rows/cols are bitmasks of the rows and tuple positions still in play.
  void run(unsigned rows, unsigned cols, int sign, Monomial acc) {
    if (rows == 0) {
      terms.push_back(Term{poly::Rational(sign), std::move(acc)});
      return;
    }
    int best = -1, best_count = 1 << 30;
    for (int i = 0; i < shape.n; ++i) {
      if (!(rows >> i & 1)) continue;
      int count = 0;
      for (int j = 0; j < shape.n; ++j) {
        if ((cols >> j & 1) && present(i + 1, tuple[j])) ++count;
      }
      if (count < best_count) {
        best = i;
        best_count = count;
      }
    }
    if (best_count == 0) return;
    // Sign of the cofactor: position of the row and column among those remaining.
    int row_pos = __builtin_popcount(rows & ((1u << best) - 1));
    int col_pos = 0;
    for (int j = 0; j < shape.n; ++j) {
      if (!(cols >> j & 1)) continue;
      if (present(best + 1, tuple[j])) {
        int s = ((row_pos + col_pos) % 2 == 0) ? sign : -sign;
        Monomial next = acc;
        poly::VarIndex v = ring.index(Variable::x(best + 1, tuple[j]));
        next.set(v, next[v] + 1);
        run(rows & ~(1u << best), cols & ~(1u << j), s, std::move(next));
      }
      ++col_pos;
    }
  }
};

}  // namespace

Polynomial minor(const poly::RingPtr& ring, const poly::OrderPtr& order, const MatrixShape& shape,
                 const LadderSpec* ladder, const ColumnTuple& tuple) {
  if (!is_column_tuple(tuple, shape)) throw DomainError("column tuple " + to_string(tuple) + " is not in D");
  Expansion e{*ring, shape, ladder, tuple, {}};
  const unsigned all = (1u << shape.n) - 1;
  e.run(all, all, 1, Monomial(ring->size()));
  return Polynomial::from_terms(ring, order, std::move(e.terms));
}

Monomial initial_minor(const poly::Ring& ring, const ColumnTuple& tuple) {
  Monomial m(ring.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    m.set(ring.index(Variable::x(static_cast<int>(i) + 1, tuple[i])), 1);
  }
  return m;
}

std::string to_string(const ColumnTuple& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + ")";
}

std::string to_string(const IndexedTuple& a) {
  std::string s = to_string(a.cols);
  s.back() = ';';
  return s + std::to_string(a.comp) + ")";
}

}  // namespace detrees::det
