#include "detrees/tableau.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "detrees/errors.hpp"

namespace detrees::tab {

using det::IndexedTuple;

Support support(const Tableau& A) {
  Support s(A.width());
  for (const Row& row : A.rows) {
    if (row.size() != A.width()) throw PreconditionError("tableau rows have different lengths");
    for (std::size_t j = 0; j < row.size(); ++j) s[j].push_back(row[j]);
  }
  for (auto& col : s) std::sort(col.begin(), col.end());
  return s;
}

Tableau standardize(const Tableau& A) {
  Support s = support(A);
  Tableau B{std::vector<Row>(A.height(), Row(A.width()))};
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t i = 0; i < s[j].size(); ++i) B.rows[i][j] = s[j][i];
  return B;
}

Row to_row(const IndexedTuple& a) {
  Row row = a.cols;
  row.push_back(a.comp);
  return row;
}

IndexedTuple to_indexed(const Row& row) {
  if (row.size() < 2) throw PreconditionError("row too short for an indexed tuple");
  return IndexedTuple{Row(row.begin(), row.end() - 1), row.back()};
}

bool tau_greater(const Row& a, const Row& b) { return a < b; }
bool tau_greater(const IndexedTuple& a, const IndexedTuple& b) { return tau_greater(to_row(a), to_row(b)); }

bool is_semistandard(const Tableau& A) {
  for (std::size_t i = 1; i < A.rows.size(); ++i) {
    if (tau_greater(A.rows[i], A.rows[i - 1])) return false;
  }
  return true;
}

bool rows_in_D(const Tableau& A, const det::MatrixShape& shape, int r) {
  for (const Row& row : A.rows) {
    if (static_cast<int>(row.size()) != shape.n + 1) return false;
    if (!det::is_column_tuple(Row(row.begin(), row.end() - 1), shape)) return false;
    if (row.back() < 1 || row.back() > r) return false;
  }
  return true;
}

bool is_standard_pair(const IndexedTuple& a, const IndexedTuple& b) {
  Row ra = to_row(a), rb = to_row(b);
  if (ra.size() != rb.size()) throw PreconditionError("tuples of different lengths");
  if (tau_greater(rb, ra)) throw PreconditionError("pair " + det::to_string(a) + ", " + det::to_string(b) + " is not semistandard");
  for (std::size_t j = 0; j < ra.size(); ++j) {
    if (ra[j] > rb[j]) return false;
  }
  return true;
}

bool is_standard(const Tableau& A, const det::MatrixShape& shape, int r) {
  if (!rows_in_D(A, shape, r)) throw PreconditionError("tableau rows are not in D x [r]");
  if (!is_semistandard(A)) throw PreconditionError("tableau is not semistandard");
  for (std::size_t h = 0; h < A.rows.size(); ++h)
    for (std::size_t k = h + 1; k < A.rows.size(); ++k)
      if (!is_standard_pair(to_indexed(A.rows[h]), to_indexed(A.rows[k]))) return false;
  return true;
}

std::pair<IndexedTuple, IndexedTuple> standard_pair(const IndexedTuple& a, const IndexedTuple& b) {
  Tableau B = standardize(Tableau{{to_row(a), to_row(b)}});
  return {to_indexed(B.rows[0]), to_indexed(B.rows[1])};
}

namespace {

struct VibrationSearch {
  const Row& c;
  const Row& d;
  int j1, j2;
  std::size_t n;
  std::map<int, int> counts;
  Row e;
  std::vector<std::pair<IndexedTuple, IndexedTuple>> out;

  void run() {
    if (e.size() == n) {
      Row g;
      for (const auto& [v, k] : counts) {
        if (k > 1) return;
        if (k == 1) g.push_back(v);
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (e[i] > g[i]) return;
      }
      if (e == c || g == d) return;
      out.push_back({IndexedTuple{e, j1}, IndexedTuple{g, j2}});
      return;
    }
    const int lower = e.empty() ? 0 : e.back();
    const int upper = c[e.size()];
    for (auto& [v, k] : counts) {
      if (v <= lower || k == 0) continue;
      if (v > upper) break;
      --k;
      e.push_back(v);
      run();
      e.pop_back();
      ++k;
    }
  }
};

}  // namespace

std::vector<std::pair<IndexedTuple, IndexedTuple>> vibrations(const IndexedTuple& a, const IndexedTuple& b) {
  if (is_standard_pair(a, b)) {
    throw PreconditionError("pair " + det::to_string(a) + ", " + det::to_string(b) + " is standard; no vibrations");
  }
  auto [c, d] = standard_pair(a, b);
  VibrationSearch s{c.cols, d.cols, c.comp, d.comp, a.cols.size(), {}, {}, {}};
  for (int v : a.cols) ++s.counts[v];
  for (int v : b.cols) ++s.counts[v];
  s.run();
  std::sort(s.out.begin(), s.out.end());
  return s.out;
}

Tableau parse_tableau(std::string_view text) {
  Tableau A;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    Row row;
    std::string tok;
    while (ls >> tok) {
      if (tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("tableau", "line " + std::to_string(lineno) + ": '" + tok + "' is not a positive integer");
      }
      int v = std::stoi(tok);
      if (v < 1) throw ParseError("tableau", "line " + std::to_string(lineno) + ": entries must be positive");
      row.push_back(v);
    }
    if (!A.rows.empty() && row.size() != A.width()) {
      throw ParseError("tableau", "line " + std::to_string(lineno) + ": row has " + std::to_string(row.size()) +
                                      " entries, expected " + std::to_string(A.width()));
    }
    A.rows.push_back(std::move(row));
  }
  if (A.rows.empty()) throw ParseError("tableau", "no rows");
  return A;
}

std::string format_tableau(const Tableau& A) {
  std::string out;
  for (const Row& row : A.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace detrees::tab
