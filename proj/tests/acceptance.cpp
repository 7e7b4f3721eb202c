// Acceptance run: one PASS/FAIL line per criterion. The cross-checks below
// recompute dimensions of graded pieces directly from the images of
// monomials, without the library's certificates, substitution or oracles.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "detrees/errors.hpp"
#include "detrees/poly/text.hpp"
#include "detrees/relations.hpp"
#include "detrees/tableau.hpp"
#include "detrees/verify/certify.hpp"

using namespace detrees;
using poly::Monomial;
using poly::Polynomial;
using poly::VarIndex;
using verify::Certificate;
using verify::MapKind;
using verify::Verdict;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

void expect_verdict(const Certificate& c, Verdict v, const std::string& what) {
  if (c.verdict != v) throw Failure(what + ": " + to_string(c.verdict) + " " + c.to_json(false).dump());
}

using InstancePtr = std::unique_ptr<Instance>;

struct Case {
  std::string name;
  std::function<InstancePtr(int r)> make;
};

Case generic(int m) {
  return {"generic 2x" + std::to_string(m), [m](int r) { return std::make_unique<Instance>(det::MatrixShape{2, m}, IdealSpec::generic(), r); }};
}

Case ladder(std::vector<det::Interval> rows, std::string name) {
  return {std::move(name), [rows](int r) {
            det::LadderSpec spec{rows};
            return std::make_unique<Instance>(spec.shape(), IdealSpec::ladder_of(spec), r);
          }};
}

Case full(int m) { return ladder({{1, m}, {1, m}}, "full ladder 2x" + std::to_string(m)); }

Case unit(int m, std::vector<det::Interval> intervals, std::string name) {
  return {std::move(name), [m, intervals](int r) {
            return std::make_unique<Instance>(det::MatrixShape{2, m}, IdealSpec::unit_of(det::UnitIntervalSpec{intervals}), r);
          }};
}

std::string label(const Case& c, int r) { return c.name + " r=" + std::to_string(r); }

std::vector<Polynomial> join(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// ---- monomial images -------------------------------------------------------

const poly::Variable& var_of(const Instance& inst, VarIndex v) { return inst.ring()->var(v); }

Monomial x_mono(const Instance& inst, int i, int j) {
  return Monomial::variable(inst.ring()->size(), inst.ring()->index(poly::Variable::x(i, j)));
}

// x[1,c_1] ... x[n,c_n] t[k]
Monomial diagonal_image(const Instance& inst, const poly::Variable& T) {
  Monomial m = Monomial::variable(inst.ring()->size(), inst.ring()->index(poly::Variable::t(T.comp)));
  for (std::size_t i = 0; i < T.cols.size(); ++i) m = m * x_mono(inst, static_cast<int>(i) + 1, T.cols[i]);
  return m;
}

Monomial initial_image(const Instance& inst, const Monomial& m) {
  Monomial out(m.size());
  for (VarIndex v = 0; v < m.size(); ++v) {
    for (int e = 0; e < m[v]; ++e) {
      const auto& var = var_of(inst, v);
      out = out * (var.family == poly::Family::T ? diagonal_image(inst, var) : Monomial::variable(m.size(), v));
    }
  }
  return out;
}

// Leibniz expansion of the minor on columns `cols`, absent entries zero.
Polynomial leibniz_minor(const Instance& inst, const std::vector<int>& cols) {
  const auto& order = inst.tau_prime();
  Polynomial out(inst.ring(), order);
  std::vector<int> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
    Monomial m(inst.ring()->size());
    bool present = true;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      int row = static_cast<int>(i) + 1, col = cols[perm[i]];
      present = present && inst.entry_present(row, col);
      if (present) m = m * x_mono(inst, row, col);
    }
    if (present) out = out + Polynomial::monomial(inst.ring(), order, m, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Memoized images of monomials under T[a;k] -> minor(a) t[k].
class ActualImages {
 public:
  explicit ActualImages(const Instance& inst) : inst_(inst) {}

  const Polynomial& operator()(const Monomial& m) {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    Polynomial img;
    VarIndex v = 0;
    while (m[v] == 0) ++v;
    const Monomial rest = m / Monomial::variable(m.size(), v);
    img = of_var(v) * (rest.is_one() ? Polynomial::constant(inst_.ring(), inst_.tau_prime(), 1) : (*this)(rest));
    return memo_.emplace(m, std::move(img)).first->second;
  }

  Polynomial apply(const Polynomial& f) {
    Polynomial out(inst_.ring(), inst_.tau_prime());
    for (const auto& t : f.terms()) {
      out = out + (t.mono.is_one() ? Polynomial::constant(inst_.ring(), inst_.tau_prime(), 1) : (*this)(t.mono))
                      .scaled(t.coeff);
    }
    return out;
  }

 private:
  Polynomial of_var(VarIndex v) {
    const auto& var = var_of(inst_, v);
    if (var.family != poly::Family::T) return Polynomial::variable(inst_.ring(), inst_.tau_prime(), var);
    return leibniz_minor(inst_, var.cols) * Polynomial::variable(inst_.ring(), inst_.tau_prime(), poly::Variable::t(var.comp));
  }

  const Instance& inst_;
  std::unordered_map<Monomial, Polynomial, poly::MonomialHash> memo_;
};

Polynomial initial_apply(const Instance& inst, const Polynomial& f) {
  Polynomial out(inst.ring(), inst.tau_prime());
  for (const auto& t : f.terms()) out = out + Polynomial::monomial(inst.ring(), inst.tau_prime(), initial_image(inst, t.mono), t.coeff);
  return out;
}

void monomials_of_degree(std::size_t nvars, const std::vector<VarIndex>& vars, int d, std::size_t from, Monomial& cur,
                         const std::function<void(const Monomial&)>& f) {
  if (d == 0) {
    f(cur);
    return;
  }
  for (std::size_t i = from; i < vars.size(); ++i) {
    Monomial next = cur * Monomial::variable(nvars, vars[i]);
    monomials_of_degree(nvars, vars, d - 1, i, next, f);
  }
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, const std::vector<VarIndex>& vars, int d) {
  std::vector<Monomial> out;
  Monomial one(nvars);
  monomials_of_degree(nvars, vars, d, 0, one, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

std::vector<VarIndex> T_indices(const Instance& inst) { return inst.ring()->family(poly::Family::T); }

std::vector<VarIndex> present_x_and_T(const Instance& inst) {
  std::vector<VarIndex> out;
  for (VarIndex v : inst.ring()->family(poly::Family::X)) {
    const auto& var = var_of(inst, v);
    if (inst.entry_present(var.row, var.col)) out.push_back(v);
  }
  for (VarIndex v : T_indices(inst)) out.push_back(v);
  return out;
}

std::size_t standard_count(const std::vector<Monomial>& monos, const std::vector<Monomial>& leads) {
  return static_cast<std::size_t>(std::count_if(monos.begin(), monos.end(), [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  }));
}

std::size_t distinct_initial_images(const Instance& inst, const std::vector<Monomial>& monos) {
  std::set<Monomial, poly::MonomialKeyLess> seen;
  for (const auto& m : monos) seen.insert(initial_image(inst, m));
  return seen.size();
}

// Rank over Z/P of the actual images, computed piece by piece in the
// multigrading by row degrees, column degrees and t degrees, which both maps
// preserve.
constexpr std::uint64_t kP = 1000003;

std::uint64_t inverse(std::uint64_t a) {
  std::uint64_t r = 1, e = kP - 2;
  while (e) {
    if (e & 1) r = r * a % kP;
    a = a * a % kP;
    e >>= 1;
  }
  return r;
}

std::uint64_t residue(const poly::Rational& q) {
  auto mod = [](const mpz_class& z) {
    mpz_class r = z % static_cast<unsigned long>(kP);
    if (r < 0) r += static_cast<unsigned long>(kP);
    return static_cast<std::uint64_t>(r.get_ui());
  };
  return mod(q.get_num()) * inverse(mod(q.get_den())) % kP;
}

using SparseRow = std::map<Monomial, std::uint64_t, poly::MonomialKeyLess>;

std::size_t rank_mod_p(std::vector<SparseRow> rows) {
  std::map<Monomial, SparseRow, poly::MonomialKeyLess> pivots;
  for (SparseRow& row : rows) {
    while (!row.empty()) {
      auto lead = std::prev(row.end());
      auto p = pivots.find(lead->first);
      if (p == pivots.end()) {
        std::uint64_t s = inverse(lead->second);
        for (auto& [_, c] : row) c = c * s % kP;
        Monomial key = lead->first;
        pivots.emplace(key, std::move(row));
        break;
      }
      std::uint64_t c = lead->second;
      for (const auto& [m, pc] : p->second) {
        std::uint64_t& e = row[m];
        e = (e + kP - c * pc % kP) % kP;
        if (e == 0) row.erase(m);
      }
    }
  }
  return pivots.size();
}

std::vector<int> multidegree(const Instance& inst, const Monomial& image) {
  const auto& shape = inst.shape();
  std::vector<int> key(static_cast<std::size_t>(shape.n + shape.m + inst.r()), 0);
  for (VarIndex v = 0; v < image.size(); ++v) {
    if (image[v] == 0) continue;
    const auto& var = var_of(inst, v);
    if (var.family == poly::Family::X) {
      key[static_cast<std::size_t>(var.row - 1)] += image[v];
      key[static_cast<std::size_t>(shape.n + var.col - 1)] += image[v];
    } else if (var.family == poly::Family::Tee) {
      key[static_cast<std::size_t>(shape.n + shape.m + var.comp - 1)] += image[v];
    }
  }
  return key;
}

std::size_t actual_rank(const Instance& inst, ActualImages& images, const std::vector<Monomial>& monos) {
  std::map<std::vector<int>, std::vector<SparseRow>> pieces;
  for (const auto& m : monos) {
    SparseRow row;
    for (const auto& t : images(m).terms()) row[t.mono] = residue(t.coeff);
    pieces[multidegree(inst, initial_image(inst, m))].push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (auto& [_, rows] : pieces) rank += rank_mod_p(std::move(rows));
  return rank;
}

std::vector<Monomial> leads_of(const std::vector<Polynomial>& G) {
  std::vector<Monomial> out;
  for (const auto& g : G) out.push_back(g.lead_monomial());
  return out;
}

// dim of the degree-d piece of the quotient, counted as distinct initial
// images, against the standard monomials of the claimed leading terms.
void hilbert_agrees(const Instance& inst, const std::vector<VarIndex>& vars, const std::vector<Polynomial>& claimed,
                    int max_degree, const std::string& what) {
  auto leads = leads_of(claimed);
  for (int d = 1; d <= max_degree; ++d) {
    auto monos = monomials_of_degree(inst.ring()->size(), vars, d);
    std::size_t expected = distinct_initial_images(inst, monos);
    std::size_t got = standard_count(monos, leads);
    expect(got == expected, what + ": degree " + std::to_string(d) + " has " + std::to_string(got) +
                                " standard monomials, quotient dimension " + std::to_string(expected));
  }
}

// Same count for the actual map, the dimension being a rank.
void actual_hilbert_agrees(const Instance& inst, const std::vector<VarIndex>& vars, const std::vector<Polynomial>& claimed,
                           int max_degree, const std::string& what) {
  auto leads = leads_of(claimed);
  ActualImages images(inst);
  for (int d = 1; d <= max_degree; ++d) {
    auto monos = monomials_of_degree(inst.ring()->size(), vars, d);
    std::size_t expected = actual_rank(inst, images, monos);
    std::size_t got = standard_count(monos, leads);
    expect(got == expected, what + ": degree " + std::to_string(d) + " has " + std::to_string(got) +
                                " standard monomials, image rank " + std::to_string(expected));
  }
}

// Subalgebra pieces: the span of the actual images has the dimension of the
// span of the initial images, so the initial algebra is generated by the
// initial terms in these degrees.
void initial_algebra_agrees(const Instance& inst, const std::vector<VarIndex>& vars, int max_degree, const std::string& what) {
  ActualImages images(inst);
  for (int d = 1; d <= max_degree; ++d) {
    auto monos = monomials_of_degree(inst.ring()->size(), vars, d);
    std::size_t initial = distinct_initial_images(inst, monos);
    std::size_t actual = actual_rank(inst, images, monos);
    expect(initial == actual, what + ": degree " + std::to_string(d) + " initial span " + std::to_string(initial) +
                                  ", actual span " + std::to_string(actual));
  }
}

int count_family(const Instance& inst, const Monomial& m, poly::Family f) {
  int n = 0;
  for (VarIndex v = 0; v < m.size(); ++v)
    if (var_of(inst, v).family == f) n += m[v];
  return n;
}

// ---- criteria --------------------------------------------------------------

tab::Tableau example_unsorted() {
  return tab::Tableau{{{1, 4, 6, 8, 1}, {1, 5, 6, 8, 3}, {2, 3, 4, 9, 2}, {2, 3, 8, 9, 3}, {2, 4, 6, 7, 1},
                       {3, 6, 7, 8, 2}, {4, 5, 7, 9, 3}}};
}

tab::Tableau example_standard() {
  return tab::Tableau{{{1, 3, 4, 7, 1}, {1, 3, 6, 8, 1}, {2, 4, 6, 8, 2}, {2, 4, 6, 8, 2}, {2, 5, 7, 9, 3},
                       {3, 5, 7, 9, 3}, {4, 6, 8, 9, 3}}};
}

std::string example_standardization() {
  expect(tab::standardize(example_unsorted()) == example_standard(), "standardize(A) differs from B");
  expect(!tab::is_standard(example_unsorted(), {4, 9}, 3), "A reported standard");
  expect(tab::is_standard(example_standard(), {4, 9}, 3), "B reported not standard");
  return "A -> B entrywise";
}

std::string example_reproduction() {
  Instance inst({3, 8}, IdealSpec::ladder_of(det::LadderSpec{{{1, 5}, {3, 7}, {4, 8}}}), 3);
  std::vector<rel::RelationFamily> families = {
      rel::en_initial(inst),           rel::en_full(inst, 4),
      rel::plucker_initial(inst),      rel::plucker_initial(inst, rel::Ambient::Rees),
      rel::plucker_lifted(inst, rel::Ambient::Fiber, 4), rel::plucker_lifted(inst, rel::Ambient::Rees, 4),
      rel::exchange_H(inst)};
  auto contains = [&](const rel::RelationFamily& fam, const std::string& text) {
    Polynomial p = rel::canonical(poly::parse_polynomial(text, inst.ring(), fam.order), fam.order);
    return std::find(fam.relations.begin(), fam.relations.end(), p) != fam.relations.end();
  };
  expect(contains(families[1], "x[1,1]*T[2 3 4;1] - x[1,2]*T[1 3 4;1]"), "two-term Eagon-Northcott relation");
  expect(contains(families[1], "x[2,4]*T[3 5 6;3] - x[2,5]*T[3 4 6;3] - x[2,3]*T[4 5 6;3] + x[2,6]*T[3 4 5;3]"),
         "four-term Eagon-Northcott relation");
  expect(contains(families[5], "T[1 4 5;1]*T[2 3 6;3] - T[1 3 5;1]*T[2 4 6;3] + T[1 3 4;1]*T[2 5 6;3]"),
         "three-term Pluecker relation");
  expect(contains(families[5],
                  "T[1 5 6;2]*T[3 4 8;3] - T[1 4 6;2]*T[3 5 8;3] + T[1 4 5;2]*T[3 6 8;3] + T[1 3 6;2]*T[4 5 8;3] - "
                  "T[1 3 5;2]*T[4 6 8;3] + T[1 3 4;2]*T[5 6 8;3]"),
         "six-term Pluecker relation");
  ActualImages actual(inst);
  std::size_t total = 0;
  for (const auto& fam : families) {
    bool initial = fam.kind == rel::Kind::ENInitial || fam.kind == rel::Kind::PluckerInitial || fam.kind == rel::Kind::ExchangeH;
    for (const auto& f : fam.relations) {
      Polynomial img = initial ? initial_apply(inst, f) : actual.apply(f);
      expect(img.is_zero(), rel::to_string(fam.kind) + " relation " + poly::to_string(f) + " does not map to 0");
      ++total;
    }
  }
  return "4 printed relations found, " + std::to_string(total) + " relations map to 0";
}

const std::vector<Case>& desk_cases() {
  static const std::vector<Case> cases = {generic(4), generic(5), full(4), full(5), ladder({{1, 3}, {2, 4}}, "ladder [1,3],[2,4]")};
  return cases;
}

std::string fiber_groebner() {
  int n = 0;
  for (const Case& c : desk_cases()) {
    for (int r : {1, 2}) {
      auto inst = c.make(r);
      std::string what = label(c, r);
      auto fam = rel::plucker_initial(*inst);
      auto el = verify::fiber_kernel_oracle(*inst, MapKind::Initial, verify::FiberMethod::Elimination, inst->sigma());
      auto en = verify::fiber_kernel_oracle(*inst, MapKind::Initial, verify::FiberMethod::Enumeration, inst->sigma());
      expect_verdict(verify::certify_groebner(*inst, "fiber-gb", fam.relations, inst->sigma(), MapKind::Initial, &el),
                     Verdict::Verified, what + " fiber gb");
      expect_verdict(verify::certify_oracle_agreement(el, en, inst->sigma(), 4), Verdict::Verified, what + " oracle agreement");
      hilbert_agrees(*inst, T_indices(*inst), fam.relations, 4, what);
      ++n;
    }
  }
  return std::to_string(n) + " instances";
}

std::string rees_groebner() {
  int n = 0;
  for (const Case& c : desk_cases()) {
    for (int r : {1, 2}) {
      auto inst = c.make(r);
      std::string what = label(c, r);
      auto en = rel::en_initial(*inst);
      auto pl = rel::plucker_initial(*inst, rel::Ambient::Rees);
      auto claimed = join(en.relations, pl.relations);
      auto oracle = verify::rees_kernel_oracle(*inst, MapKind::Initial, inst->sigma_prime());
      expect_verdict(verify::certify_groebner(*inst, "rees-gb", claimed, inst->sigma_prime(), MapKind::Initial, &oracle),
                     Verdict::Verified, what + " rees gb");
      for (const auto& f : en.relations) {
        const Monomial& lm = f.lead_monomial();
        expect(count_family(*inst, lm, poly::Family::X) == 1 && count_family(*inst, lm, poly::Family::T) == 1,
               what + " EN lead " + poly::to_string(lm, *inst->ring()));
      }
      for (const auto& f : pl.relations) {
        expect(count_family(*inst, f.lead_monomial(), poly::Family::T) == 2,
               what + " Pluecker lead " + poly::to_string(f.lead_monomial(), *inst->ring()));
      }
      hilbert_agrees(*inst, present_x_and_T(*inst), claimed, 4, what);
      ++n;
    }
  }
  return std::to_string(n) + " instances";
}

std::string exchange_property() {
  std::vector<Case> ladders = {full(4), full(5), ladder({{1, 3}, {2, 4}}, "ladder [1,3],[2,4]"),
                               ladder({{1, 4}, {2, 5}}, "ladder [1,4],[2,5]")};
  int n = 0;
  for (const Case& c : ladders) {
    for (int r : {1, 2}) {
      auto inst = c.make(r);
      auto cert = verify::check_l_exchange(*inst->ring(), verify::initial_generators(*inst), 2);
      expect_verdict(cert, Verdict::Verified, label(c, r));
      expect(cert.parts["exchange"] == "verified_within_bound", label(c, r) + " part");
      ++n;
    }
  }
  Instance ex({3, 8}, IdealSpec::ladder_of(det::LadderSpec{{{1, 5}, {3, 7}, {4, 8}}}), 3);
  expect_verdict(verify::check_l_exchange(*ex.ring(), verify::initial_generators(ex), 2), Verdict::Verified, "3x8 ladder");
  ++n;

  // x[1,1]x[2,2] and x[1,2]x[2,3]: the columns {1,2} and {2,3} of a 2x3
  // matrix, which is not an interval family for the exchange property.
  Instance g23({2, 3}, IdealSpec::generic(), 1);
  const auto& R = *g23.ring();
  Monomial g1 = x_mono(g23, 1, 1) * x_mono(g23, 2, 2), g2 = x_mono(g23, 1, 2) * x_mono(g23, 2, 3);
  auto bad = verify::check_l_exchange(R, {{g1, g2}}, 1);
  expect_verdict(bad, Verdict::Falsified, "2x3 counterexample");
  expect(bad.witness["u"] == "x[1,2]*x[2,3]" && bad.witness["v"] == "x[1,1]*x[2,2]", "counterexample u, v");
  expect(bad.witness["l0"] == 1 && bad.witness["k0"] == 1, "counterexample x0");
  // Independent confirmation: no x1 < x[1,1] dividing u makes x[1,1] u / x1 a generator.
  const Monomial u = g2, x0 = x_mono(g23, 1, 1);
  for (VarIndex v = 0; v < R.size(); ++v) {
    if (R.var(v).family != poly::Family::X || u[v] == 0 || v == R.index(poly::Variable::x(1, 1))) continue;
    Monomial swapped = x0 * u / Monomial::variable(R.size(), v);
    expect(swapped != g1 && swapped != g2, "counterexample admits an exchange");
  }
  return std::to_string(n) + " ladder instances verified, counterexample witness u=x[1,2]*x[2,3] v=x[1,1]*x[2,2]";
}

std::string sagbi_and_lifted() {
  std::vector<Case> cases = {full(4), full(5), ladder({{1, 3}, {2, 4}}, "ladder [1,3],[2,4]"),
                             ladder({{1, 4}, {2, 5}}, "ladder [1,4],[2,5]")};
  int n = 0;
  for (const Case& c : cases) {
    for (int r : {1, 2}) {
      auto inst = c.make(r);
      std::string what = label(c, r);
      auto toric = join(rel::en_initial(*inst).relations, rel::plucker_initial(*inst, rel::Ambient::Rees).relations);
      expect_verdict(verify::certify_sagbi("sagbi", verify::sagbi_generators(*inst, true), toric, inst->tau_prime(), 4),
                     Verdict::Verified, what + " sagbi");
      initial_algebra_agrees(*inst, present_x_and_T(*inst), 4, what);
      ++n;
    }
  }
  int lifted = 0;
  for (const Case& c : {generic(4), full(4), ladder({{1, 3}, {2, 4}}, "ladder [1,3],[2,4]")}) {
    for (int r : {1, 2}) {
      auto inst = c.make(r);
      std::string what = label(c, r);
      auto en = rel::en_full(*inst, 4);
      const auto order = en.order;
      std::vector<Polynomial> claimed = en.relations;
      for (const auto& f : rel::plucker_lifted(*inst, rel::Ambient::Rees, 4).relations) claimed.push_back(f.with_order(order));
      auto oracle = verify::rees_kernel_oracle(*inst, MapKind::Actual, order);
      expect_verdict(verify::certify_groebner(*inst, "rees-gb", claimed, order, MapKind::Actual, &oracle), Verdict::Verified,
                     what + " lifted rees gb");
      actual_hilbert_agrees(*inst, present_x_and_T(*inst), claimed, 4, what + " lifted");
      ++lifted;
    }
  }
  return std::to_string(n) + " sagbi instances, " + std::to_string(lifted) + " lifted rees instances";
}

std::string unit_interval() {
  std::vector<Case> cases = {unit(4, {{1, 3}, {2, 4}}, "unit {[1,3],[2,4]} 2x4"), unit(5, {{1, 3}, {2, 5}}, "unit {[1,3],[2,5]} 2x5")};
  int n = 0;
  for (const Case& c : cases) {
    for (int r : {1, 2}) {
      auto inst = c.make(r);
      std::string what = label(c, r);
      auto fam = rel::plucker_initial(*inst);
      auto oracle = verify::fiber_kernel_oracle(*inst, MapKind::Initial, verify::FiberMethod::Elimination, inst->sigma());
      expect_verdict(verify::certify_groebner(*inst, "fiber-gb", fam.relations, inst->sigma(), MapKind::Initial, &oracle),
                     Verdict::Verified, what + " fiber gb");
      expect_verdict(verify::certify_sagbi("sagbi", verify::sagbi_generators(*inst, false), fam.relations, inst->tau_prime(), 4),
                     Verdict::Verified, what + " fiber sagbi");
      for (const auto& f : fam.relations) {
        const Monomial& lm = f.lead_monomial();
        bool squarefree = std::all_of(lm.exponents().begin(), lm.exponents().end(), [](auto e) { return e <= 1; });
        expect(f.total_degree() == 2 && lm.degree() == 2 && squarefree, what + " element " + poly::to_string(f));
      }
      hilbert_agrees(*inst, T_indices(*inst), fam.relations, 4, what);
      initial_algebra_agrees(*inst, T_indices(*inst), 4, what);
      ++n;
    }
  }
  return std::to_string(n) + " instances";
}

// ---- property suites -------------------------------------------------------

bool columns_sorted(const tab::Tableau& A) {
  for (std::size_t i = 1; i < A.rows.size(); ++i)
    for (std::size_t j = 0; j < A.width(); ++j)
      if (A.rows[i][j] < A.rows[i - 1][j]) return false;
  return true;
}

std::multiset<int> column_multiset(const tab::Tableau& A, std::size_t j) {
  std::multiset<int> s;
  for (const auto& row : A.rows) s.insert(row[j]);
  return s;
}

std::optional<det::LadderSpec> random_ladder(std::mt19937_64& rng, int n, int m) {
  std::vector<int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (auto& v : lo) v = std::uniform_int_distribution<int>(1, m)(rng);
  for (auto& v : hi) v = std::uniform_int_distribution<int>(1, m)(rng);
  std::sort(lo.begin(), lo.end());
  std::sort(hi.begin(), hi.end());
  det::LadderSpec spec;
  for (int i = 0; i < n; ++i) spec.rows.push_back({lo[static_cast<std::size_t>(i)], hi[static_cast<std::size_t>(i)]});
  try {
    spec.validate();
  } catch (const DomainError&) {
    return std::nullopt;
  }
  if (spec.shape().m != m || det::ladder_index_set(spec).empty()) return std::nullopt;
  return spec;
}

void random_tableaux(std::mt19937_64& rng, int count) {
  int done = 0;
  while (done < count) {
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    int m = std::uniform_int_distribution<int>(n, 9)(rng);
    int r = std::uniform_int_distribution<int>(1, 3)(rng);
    int p = std::uniform_int_distribution<int>(1, 8)(rng);
    det::MatrixShape shape{n, m};
    std::vector<det::ColumnTuple> index_set = det::enumerate_D(shape);
    bool use_ladder = n >= 2 && rng() % 2 == 0;
    if (use_ladder) {
      auto spec = random_ladder(rng, n, m);
      if (!spec) continue;
      index_set = det::ladder_index_set(*spec);
    }
    std::set<det::ColumnTuple> allowed(index_set.begin(), index_set.end());
    tab::Tableau A;
    for (int i = 0; i < p; ++i) {
      det::IndexedTuple a{index_set[rng() % index_set.size()], std::uniform_int_distribution<int>(1, r)(rng)};
      A.rows.push_back(tab::to_row(a));
    }
    tab::Tableau B = tab::standardize(A);
    std::string what = "tableau\n" + tab::format_tableau(A);
    expect(tab::standardize(B) == B, "standardize not idempotent on " + what);
    expect(columns_sorted(B), "columns not sorted for " + what);
    for (std::size_t j = 0; j < A.width(); ++j) expect(column_multiset(A, j) == column_multiset(B, j), "support changed for " + what);
    expect(tab::support(A) == tab::support(B), "support() differs for " + what);
    expect(tab::rows_in_D(B, shape, r), "rows leave D x [r] for " + what);
    for (const auto& row : B.rows)
      expect(allowed.count(det::ColumnTuple(row.begin(), row.end() - 1)) == 1, "rows leave the ladder index set for " + what);
    expect(tab::is_standard(B, shape, r), "standardized tableau not standard for " + what);
    ++done;
  }
}

// grevlex on assemblies: the variables ranked by tau on their rows; a
// monomial is smaller when it has more of the smallest variable where they
// differ.
bool sigma_less(const std::map<tab::Row, int>& a, const std::map<tab::Row, int>& b, const std::vector<tab::Row>& ascending) {
  for (const auto& row : ascending) {
    int ea = a.count(row) ? a.at(row) : 0, eb = b.count(row) ? b.at(row) : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

std::size_t standard_vs_minimal() {
  det::MatrixShape shape{2, 4};
  const int r = 2;
  std::vector<tab::Row> rows;
  for (const auto& c : det::enumerate_D(shape))
    for (int k = 1; k <= r; ++k) rows.push_back(tab::to_row({c, k}));
  // tau-smallest first: larger rows in lex order are smaller under tau.
  std::vector<tab::Row> ascending = rows;
  std::sort(ascending.begin(), ascending.end(), [](const tab::Row& a, const tab::Row& b) { return tab::tau_greater(b, a); });
  std::size_t checked = 0;
  for (int p = 1; p <= 4; ++p) {
    std::map<tab::Support, std::vector<tab::Tableau>> by_support;
    std::function<void(std::size_t, tab::Tableau&)> build = [&](std::size_t from, tab::Tableau& T) {
      if (static_cast<int>(T.height()) == p) {
        tab::Tableau S = T;
        std::sort(S.rows.begin(), S.rows.end(), [](const tab::Row& a, const tab::Row& b) { return tab::tau_greater(a, b); });
        by_support[tab::support(S)].push_back(S);
        return;
      }
      for (std::size_t i = from; i < rows.size(); ++i) {
        T.rows.push_back(rows[i]);
        build(i, T);
        T.rows.pop_back();
      }
    };
    tab::Tableau T;
    build(0, T);
    for (const auto& [_, group] : by_support) {
      auto exps = [](const tab::Tableau& A) {
        std::map<tab::Row, int> e;
        for (const auto& row : A.rows) ++e[row];
        return e;
      };
      std::size_t min = 0;
      for (std::size_t i = 1; i < group.size(); ++i)
        if (sigma_less(exps(group[i]), exps(group[min]), ascending)) min = i;
      for (std::size_t i = 0; i < group.size(); ++i) {
        expect(tab::is_standard(group[i], shape, r) == (i == min),
               "is_standard disagrees with sigma-minimality on\n" + tab::format_tableau(group[i]));
        ++checked;
      }
    }
  }
  return checked;
}

// Non-standard pairs of the index set: min and max stay inside and sit
// strictly between the pair under tau. Vibrations stay inside the index set
// for unit intervals, and inside D x [r] in general.
std::size_t closure_exhaustive(const Instance& inst, const std::string& what) {
  std::set<det::ColumnTuple> allowed(inst.index_set().begin(), inst.index_set().end());
  const auto all = det::enumerate_D(inst.shape());
  std::set<det::ColumnTuple> in_D(all.begin(), all.end());
  auto inside = [&](const std::set<det::ColumnTuple>& set, const det::IndexedTuple& a) {
    return set.count(a.cols) == 1 && a.comp >= 1 && a.comp <= inst.r();
  };
  const bool unit = inst.kind() == IdealKind::UnitInterval;
  std::size_t pairs = 0;
  auto tuples = inst.indexed_tuples();
  for (const auto& a : tuples) {
    for (const auto& b : tuples) {
      if (tab::tau_greater(b, a) || tab::is_standard_pair(a, b)) continue;
      std::string pair = det::to_string(a) + ", " + det::to_string(b);
      auto [c, d] = tab::standard_pair(a, b);
      expect(inside(allowed, c) && inside(allowed, d), what + ": min/max of " + pair);
      expect(tab::tau_greater(c, a) && tab::tau_greater(b, d), what + ": min/max order for " + pair);
      for (const auto& [e, g] : tab::vibrations(a, b))
        expect(inside(unit ? allowed : in_D, e) && inside(unit ? allowed : in_D, g), what + ": vibration of " + pair);
      ++pairs;
    }
  }
  return pairs;
}

std::size_t mutations() {
  std::size_t flipped = 0;
  Instance inst({2, 4}, IdealSpec::ladder_of(det::LadderSpec::full({2, 4})), 2);
  auto oracle = verify::fiber_kernel_oracle(inst, MapKind::Initial, verify::FiberMethod::Elimination, inst.sigma());
  auto family = rel::plucker_initial(inst).relations;
  for (std::size_t drop = 0; drop < family.size(); ++drop) {
    auto mutated = family;
    mutated.erase(mutated.begin() + static_cast<long>(drop));
    auto c = verify::certify_groebner(inst, "fiber-gb", mutated, inst.sigma(), MapKind::Initial, &oracle);
    expect_verdict(c, Verdict::Falsified, "dropping " + poly::to_string(family[drop]));
    expect(c.part_witnesses["completeness"]["generator"] == poly::to_string(family[drop]), "dropped generator witness");
    ++flipped;
  }
  auto bogus = family;
  bogus.push_back(poly::parse_polynomial("T[1 2;1]*T[3 4;2] - T[1 3;1]*T[2 4;2]", inst.ring(), inst.sigma()));
  expect_verdict(verify::certify_groebner(inst, "fiber-gb", bogus, inst.sigma(), MapKind::Initial, &oracle), Verdict::Falsified,
                 "non-kernel element");
  ++flipped;

  auto en = rel::en_initial(inst).relations;
  auto pl = rel::plucker_initial(inst, rel::Ambient::Rees).relations;
  auto rees_oracle = verify::rees_kernel_oracle(inst, MapKind::Initial, inst.sigma_prime());
  for (std::size_t drop : {std::size_t{0}, en.size() - 1}) {
    auto mutated = en;
    mutated.erase(mutated.begin() + static_cast<long>(drop));
    expect_verdict(verify::certify_groebner(inst, "rees-gb", join(mutated, pl), inst.sigma_prime(), MapKind::Initial, &rees_oracle),
                   Verdict::Falsified, "dropping EN relation");
    ++flipped;
  }

  auto lifted = rel::plucker_lifted(inst, rel::Ambient::Fiber, 4);
  auto three = std::find_if(lifted.relations.begin(), lifted.relations.end(), [](const Polynomial& f) { return f.size() >= 3; });
  expect(three != lifted.relations.end(), "no three-term lifted relation");
  std::vector<poly::Term> terms = three->terms();
  terms.back().coeff *= 2;
  auto perturbed = lifted.relations;
  perturbed[static_cast<std::size_t>(three - lifted.relations.begin())] = Polynomial::from_terms(inst.ring(), lifted.order, terms);
  auto c = verify::certify_groebner(inst, "fiber-gb", perturbed, lifted.order, MapKind::Actual, nullptr);
  expect_verdict(c, Verdict::Falsified, "perturbed lifted coefficient");
  expect(c.parts["membership"] == "falsified", "perturbed coefficient caught by membership");
  ++flipped;

  Instance g24({2, 4}, IdealSpec::generic(), 1);
  auto gens = verify::sagbi_generators(g24, true);
  auto toric = join(rel::en_initial(g24).relations, rel::plucker_initial(g24, rel::Ambient::Rees).relations);
  for (auto& g : gens) {
    if (g.tag == 0 || g.image.size() < 2) continue;
    std::vector<poly::Term> t = g.image.terms();
    t.back().coeff *= 2;
    g.image = Polynomial::from_terms(g24.ring(), g.image.order(), t);
    break;
  }
  expect_verdict(verify::certify_sagbi("sagbi", gens, toric, g24.tau_prime(), 4), Verdict::Falsified, "perturbed minor image");
  ++flipped;

  auto el = verify::fiber_kernel_oracle(g24, MapKind::Initial, verify::FiberMethod::Elimination, g24.sigma());
  auto enumerated = verify::fiber_kernel_oracle(g24, MapKind::Initial, verify::FiberMethod::Enumeration, g24.sigma());
  expect(!enumerated.generators.empty(), "enumeration found nothing");
  enumerated.generators.pop_back();
  expect_verdict(verify::certify_oracle_agreement(el, enumerated, g24.sigma(), 4), Verdict::Falsified, "truncated enumeration");
  ++flipped;
  return flipped;
}

std::string property_suites() {
  std::mt19937_64 rng(20240611);
  random_tableaux(rng, 500);
  std::size_t assemblies = standard_vs_minimal();
  std::size_t pairs = 0;
  std::vector<Case> cases = {full(4), full(5), ladder({{1, 3}, {2, 4}}, "ladder [1,3],[2,4]"), ladder({{1, 4}, {2, 5}}, "ladder [1,4],[2,5]"),
                             unit(4, {{1, 3}, {2, 4}}, "unit {[1,3],[2,4]} 2x4"), unit(5, {{1, 3}, {2, 5}}, "unit {[1,3],[2,5]} 2x5"),
                             unit(6, {{1, 4}, {3, 6}}, "unit {[1,4],[3,6]} 2x6")};
  for (const Case& c : cases)
    for (int r : {1, 2}) pairs += closure_exhaustive(*c.make(r), label(c, r));
  Instance ex({3, 8}, IdealSpec::ladder_of(det::LadderSpec{{{1, 5}, {3, 7}, {4, 8}}}), 2);
  pairs += closure_exhaustive(ex, "3x8 ladder");
  std::size_t flipped = mutations();
  return "500 tableaux, " + std::to_string(assemblies) + " assemblies, " + std::to_string(pairs) + " non-standard pairs, " +
         std::to_string(flipped) + " mutations falsified";
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "example tableau standardization", 1, example_standardization},
      {2, "3x8 ladder example relations", 60, example_reproduction},
      {3, "fiber Groebner bases with oracle agreement", 120, fiber_groebner},
      {4, "Rees Groebner bases and leading terms", 300, rees_groebner},
      {5, "bounded l-exchange", 30, exchange_property},
      {6, "SAGBI bases and lifted Rees Groebner bases", 600, sagbi_and_lifted},
      {7, "unit interval fiber", 300, unit_interval},
      {8, "property suites", 600, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.limit_s) {
      ok = false;
      detail += "; exceeded " + std::to_string(static_cast<int>(c.limit_s)) + " s";
    }
    failed += !ok;
    std::printf("%s [%d] %s (%.2f s): %s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
