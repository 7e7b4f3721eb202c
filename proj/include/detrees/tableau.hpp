#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "detrees/determinantal.hpp"

namespace detrees::tab {

using Row = std::vector<int>;

// A p x w array of positive integers, stored row by row. When the rows
// describe elements of D x [r], w = n + 1 and the last entry is the component.
struct Tableau {
  std::vector<Row> rows;

  std::size_t height() const { return rows.size(); }
  std::size_t width() const { return rows.empty() ? 0 : rows.front().size(); }
  bool operator==(const Tableau&) const = default;
};

// supp_j for each column j, each multiset listed in increasing order.
using Support = std::vector<std::vector<int>>;

Support support(const Tableau& A);

// Sorts every column increasingly from top to bottom.
Tableau standardize(const Tableau& A);

Row to_row(const det::IndexedTuple& a);
det::IndexedTuple to_indexed(const Row& row);

// a >_tau b on Z^{n+1}: the first nonzero entry of a - b is negative.
bool tau_greater(const Row& a, const Row& b);
bool tau_greater(const det::IndexedTuple& a, const det::IndexedTuple& b);

bool is_semistandard(const Tableau& A);
bool rows_in_D(const Tableau& A, const det::MatrixShape& shape, int r);

// Throws PreconditionError unless a >=_tau b.
bool is_standard_pair(const det::IndexedTuple& a, const det::IndexedTuple& b);
// Throws PreconditionError unless A is semistandard with rows in D x [r].
bool is_standard(const Tableau& A, const det::MatrixShape& shape, int r);

// The rows of standardize([a, b]): componentwise min and max.
std::pair<det::IndexedTuple, det::IndexedTuple> standard_pair(const det::IndexedTuple& a,
                                                              const det::IndexedTuple& b);

// Vibrations of a >_tau b: pairs (e, j1), (g, j2) with j1, j2 the components
// of min(a, b), max(a, b), such that e_i <= min(g_i, c_i), the column entries
// of e and g together are those of a and b, e != c and g != d. Sorted
// ascending by (e, g). Throws PreconditionError when [a, b] is standard or
// not semistandard.
std::vector<std::pair<det::IndexedTuple, det::IndexedTuple>> vibrations(const det::IndexedTuple& a,
                                                                        const det::IndexedTuple& b);

// Text format: one row per line, entries separated by whitespace. Blank
// lines and lines starting with '#' are skipped. Throws ParseError.
Tableau parse_tableau(std::string_view text);
std::string format_tableau(const Tableau& A);

}  // namespace detrees::tab
