#include <doctest.h>

#include <algorithm>
#include <set>

#include "detrees/errors.hpp"
#include "detrees/poly/groebner.hpp"
#include "detrees/poly/text.hpp"
#include "detrees/relations.hpp"
#include "detrees/tableau.hpp"
#include "detrees/verify/certify.hpp"

using namespace detrees;
using namespace detrees::verify;
using poly::Polynomial;

namespace {

Instance generic(int m, int r) { return Instance({2, m}, IdealSpec::generic(), r); }
Instance full_ladder(int m, int r) { return Instance({2, m}, IdealSpec::ladder_of(det::LadderSpec::full({2, m})), r); }
Instance example(int r) { return Instance({3, 8}, IdealSpec::ladder_of(det::LadderSpec{{{1, 5}, {3, 7}, {4, 8}}}), r); }

Polynomial parse(const Instance& inst, const std::string& text, const poly::OrderPtr& order) {
  return poly::parse_polynomial(text, inst.ring(), order);
}

std::vector<Polynomial> join(const rel::RelationFamily& a, const rel::RelationFamily& b) {
  std::vector<Polynomial> out = a.relations;
  out.insert(out.end(), b.relations.begin(), b.relations.end());
  return out;
}

// Every element of A reduces to zero modulo a Groebner basis of B.
bool contained(const std::vector<Polynomial>& A, const std::vector<Polynomial>& B, const poly::OrderPtr& order) {
  std::vector<Polynomial> G = B.empty() ? B : poly::buchberger(B, order).basis;
  return std::all_of(A.begin(), A.end(), [&](const Polynomial& f) { return poly::normal_form(f, G, order).is_zero(); });
}

bool same_ideal(const std::vector<Polynomial>& A, const std::vector<Polynomial>& B, const poly::OrderPtr& order) {
  return contained(A, B, order) && contained(B, A, order);
}

}  // namespace

TEST_CASE("fiber kernel oracle examples") {
  Instance g23 = generic(3, 1);
  CHECK(fiber_kernel_oracle(g23, MapKind::Initial, FiberMethod::Enumeration, g23.sigma()).generators.empty());

  Instance g24 = generic(4, 1);
  OracleOptions three;
  three.degree_bound = 3;
  OracleResult en = fiber_kernel_oracle(g24, MapKind::Initial, FiberMethod::Enumeration, g24.sigma(), three);
  REQUIRE(en.generators.size() == 1);
  CHECK(en.generators[0] == parse(g24, "T[1 4;1]*T[2 3;1] - T[1 3;1]*T[2 4;1]", g24.sigma()));

  OracleResult el = fiber_kernel_oracle(g24, MapKind::Actual, FiberMethod::Elimination, g24.sigma());
  REQUIRE(el.complete);
  REQUIRE(el.generators.size() == 1);
  CHECK(el.generators[0].monic() ==
        parse(g24, "T[1 4;1]*T[2 3;1] - T[1 3;1]*T[2 4;1] + T[1 2;1]*T[3 4;1]", g24.sigma()));

  CHECK_THROWS_AS(fiber_kernel_oracle(g24, MapKind::Actual, FiberMethod::Enumeration, g24.sigma()),
                  PreconditionError);
}

TEST_CASE("rees kernel oracle examples") {
  Instance g22 = generic(2, 1);
  CHECK(rees_kernel_oracle(g22, MapKind::Actual, g22.sigma_prime()).generators.empty());

  Instance g23 = generic(3, 1);
  OracleResult ini = rees_kernel_oracle(g23, MapKind::Initial, g23.sigma_prime());
  REQUIRE(ini.complete);
  CHECK(same_ideal(ini.generators, rel::exchange_H(g23).relations, g23.sigma_prime()));
  CHECK(same_ideal(ini.generators, rel::en_initial(g23).relations, g23.sigma_prime()));

  Instance f24 = full_ladder(4, 2);
  poly::OrderPtr omega = f24.compile(f24.omega_prime_spec(4));
  OracleResult act = rees_kernel_oracle(f24, MapKind::Actual, omega);
  REQUIRE(act.complete);
  auto claimed = join(rel::en_full(f24, 4), rel::plucker_lifted(f24, rel::Ambient::Rees, 4));
  CHECK(same_ideal(act.generators, claimed, omega));
}

TEST_CASE("oracle cap makes completeness inconclusive") {
  Instance inst = example(1);
  OracleResult r = rees_kernel_oracle(inst, MapKind::Initial, inst.sigma_prime());
  CHECK_FALSE(r.complete);
  CHECK(r.exhausted == "variable_cap");
  auto claimed = join(rel::en_initial(inst), rel::plucker_initial(inst, rel::Ambient::Rees));
  Certificate c = certify_groebner(inst, "rees-gb", claimed, inst.sigma_prime(), MapKind::Initial, &r);
  CHECK(c.verdict == Verdict::Inconclusive);
  CHECK(c.parts["membership"] == "verified");
  CHECK(c.parts["closure"] == "verified");
  CHECK(c.exhausted == "variable_cap");
}

TEST_CASE("oracles agree on monomial instances") {
  for (int m : {4, 5}) {
    for (int r : {1, 2}) {
      Instance inst = generic(m, r);
      OracleResult el = fiber_kernel_oracle(inst, MapKind::Initial, FiberMethod::Elimination, inst.sigma());
      OracleResult en = fiber_kernel_oracle(inst, MapKind::Initial, FiberMethod::Enumeration, inst.sigma());
      CHECK(certify_oracle_agreement(el, en, inst.sigma(), 4).verdict == Verdict::Verified);
    }
  }
}

TEST_CASE("fiber groebner certificate and mutations") {
  Instance r1 = full_ladder(4, 1);
  OracleResult o1 = fiber_kernel_oracle(r1, MapKind::Initial, FiberMethod::Elimination, r1.sigma());
  auto g1 = rel::plucker_initial(r1).relations;
  Certificate c1 = certify_groebner(r1, "fiber-gb", g1, r1.sigma(), MapKind::Initial, &o1);
  CHECK(c1.verdict == Verdict::Verified);
  CHECK(c1.parts["completeness"] == "verified");

  Instance inst = full_ladder(4, 2);
  OracleResult oracle = fiber_kernel_oracle(inst, MapKind::Initial, FiberMethod::Elimination, inst.sigma());
  auto family = rel::plucker_initial(inst).relations;
  REQUIRE(family.size() > 1);
  for (std::size_t drop = 0; drop < family.size(); ++drop) {
    std::vector<Polynomial> mutated = family;
    mutated.erase(mutated.begin() + static_cast<long>(drop));
    Certificate c = certify_groebner(inst, "fiber-gb", mutated, inst.sigma(), MapKind::Initial, &oracle);
    REQUIRE(c.verdict == Verdict::Falsified);
    CHECK(c.parts["completeness"] == "falsified");
    CHECK(c.part_witnesses["completeness"]["generator"] == poly::to_string(family[drop]));
  }

  std::vector<Polynomial> bogus = family;
  bogus.push_back(parse(inst, "T[1 2;1]*T[3 4;2] - T[1 3;1]*T[2 4;2]", inst.sigma()));
  Certificate c = certify_groebner(inst, "fiber-gb", bogus, inst.sigma(), MapKind::Initial, &oracle);
  CHECK(c.verdict == Verdict::Falsified);
  CHECK(c.witness["part"] == "membership");
}

TEST_CASE("fiber leading terms are the non-standard pairs") {
  for (const Instance& inst : {generic(4, 2), full_ladder(5, 1), generic(5, 2)}) {
    std::set<poly::Monomial, poly::MonomialKeyLess> expected;
    auto tuples = inst.indexed_tuples();
    for (const auto& a : tuples) {
      for (const auto& b : tuples) {
        if (tab::tau_greater(b, a) || a == b || tab::is_standard_pair(a, b)) continue;
        expected.insert(inst.T_monomial(a) * inst.T_monomial(b));
      }
    }
    std::set<poly::Monomial, poly::MonomialKeyLess> leads;
    for (const Polynomial& f : rel::plucker_initial(inst).relations) leads.insert(f.lead_monomial());
    CHECK(leads == expected);
  }
}

TEST_CASE("initial rees groebner certificate and leading terms") {
  Instance inst = full_ladder(4, 2);
  OracleResult oracle = rees_kernel_oracle(inst, MapKind::Initial, inst.sigma_prime());
  auto en = rel::en_initial(inst);
  auto pl = rel::plucker_initial(inst, rel::Ambient::Rees);
  Certificate c = certify_groebner(inst, "rees-gb", join(en, pl), inst.sigma_prime(), MapKind::Initial, &oracle);
  CHECK(c.verdict == Verdict::Verified);
  const auto& R = *inst.ring();
  auto count = [&](const poly::Monomial& m, poly::Family f) {
    int n = 0;
    for (poly::VarIndex v = 0; v < m.size(); ++v) {
      if (R.var(v).family == f) n += m[v];
    }
    return n;
  };
  for (const Polynomial& f : en.relations) {
    CHECK(count(f.lead_monomial(), poly::Family::X) == 1);
    CHECK(count(f.lead_monomial(), poly::Family::T) == 1);
  }
  for (const Polynomial& f : pl.relations) CHECK(count(f.lead_monomial(), poly::Family::T) == 2);
}

TEST_CASE("subduction examples") {
  Instance inst = generic(4, 1);
  auto gens = sagbi_generators(inst, false);
  std::vector<Polynomial> images;
  for (const auto& g : gens) images.push_back(g.image);
  const auto& order = inst.tau_prime();
  Substitution phi(inst, MapKind::Actual);

  Polynomial prod = images[0] * images[3];
  CHECK(subduct(prod, images, order).is_zero());

  Polynomial three = parse(inst, "T[1 4;1]*T[2 3;1] - T[1 3;1]*T[2 4;1] + T[1 2;1]*T[3 4;1]", inst.sigma());
  CHECK(phi(three).is_zero());
  CHECK(subduct(phi(three), images, order).is_zero());

  Polynomial f = phi(parse(inst, "T[1 3;1]*T[2 4;1] - T[1 2;1]*T[3 4;1]", inst.sigma()));
  CHECK_FALSE(f.is_zero());
  CHECK(subduct(f, images, order).is_zero());

  // x[1,2] alone is not a product of initial minors.
  Polynomial x = Polynomial::variable(inst.ring(), order, poly::Variable::x(1, 2));
  CHECK(subduct(x, images, order) == x);
}

TEST_CASE("sagbi certificates") {
  Instance g24 = generic(4, 1);
  auto toric = join(rel::en_initial(g24), rel::plucker_initial(g24, rel::Ambient::Rees));
  CHECK(certify_sagbi("sagbi", sagbi_generators(g24, true), toric, g24.tau_prime(), 4).verdict == Verdict::Verified);

  Instance ex = example(1);
  auto toric_ex = join(rel::en_initial(ex), rel::plucker_initial(ex, rel::Ambient::Rees));
  CHECK(certify_sagbi("sagbi", sagbi_generators(ex, true), toric_ex, ex.tau_prime(), 3).verdict ==
        Verdict::Verified);

  Instance unit(det::MatrixShape{2, 4}, IdealSpec::unit_of(det::UnitIntervalSpec{{{1, 3}, {2, 4}}}), 2);
  Certificate cu = certify_sagbi("sagbi", sagbi_generators(unit, false), rel::plucker_initial(unit).relations,
                                 unit.tau_prime(), 4);
  CHECK(cu.verdict == Verdict::Verified);
}

TEST_CASE("sagbi certificate failures carry witnesses") {
  Instance inst = generic(2, 1);
  const auto& R = *inst.ring();
  const auto& order = inst.tau_prime();
  auto var = [&](int i, int j) { return R.index(poly::Variable::x(i, j)); };
  auto x = [&](int i, int j) { return Polynomial::variable(inst.ring(), order, poly::Variable::x(i, j)); };

  // x[1,1] + x[1,2] and x[1,1]^2: the relation between the initial terms
  // does not lift.
  std::vector<SubalgebraGenerator> gens = {{var(1, 1), x(1, 1) + x(1, 2), 1}, {var(2, 1), x(1, 1) * x(1, 1), 2}};
  Polynomial rel = x(2, 1) - x(1, 1) * x(1, 1);
  Certificate c = certify_sagbi("sagbi", gens, {rel}, order, 2);
  CHECK(c.verdict == Verdict::Falsified);
  CHECK(c.witness["part"] == "lifting");

  // Two generators with one initial term: their difference has a new one.
  std::vector<SubalgebraGenerator> twins = {{var(1, 1), x(1, 1) + x(1, 2), 1}, {var(2, 1), x(1, 1) + x(2, 1), 1}};
  Certificate d = certify_sagbi("sagbi", twins, {}, order, 1);
  CHECK(d.verdict == Verdict::Falsified);
  CHECK(d.witness["part"] == "initial");
  CHECK(d.witness["lead"] == "x[1,2]");
}

TEST_CASE("l-exchange checks") {
  Instance ex = example(3);
  Certificate ok = check_l_exchange(*ex.ring(), initial_generators(ex), 2);
  CHECK(ok.verdict == Verdict::Verified);
  CHECK(ok.parts["exchange"] == "verified_within_bound");

  Instance g23 = generic(3, 1);
  const auto& R = *g23.ring();
  auto mono = [&](std::initializer_list<std::pair<int, int>> xs) {
    poly::Monomial m(R.size());
    for (auto [i, j] : xs) m = m * poly::Monomial::variable(R.size(), R.index(poly::Variable::x(i, j)));
    return m;
  };
  Certificate bad = check_l_exchange(R, {{mono({{1, 1}, {2, 2}}), mono({{1, 2}, {2, 3}})}}, 1);
  REQUIRE(bad.verdict == Verdict::Falsified);
  CHECK(bad.witness["u"] == "x[1,2]*x[2,3]");
  CHECK(bad.witness["v"] == "x[1,1]*x[2,2]");
  CHECK(bad.witness["l0"] == 1);
  CHECK(bad.witness["k0"] == 1);

  Certificate single = check_l_exchange(R, {{mono({{1, 1}, {2, 2}})}, {mono({{1, 2}, {2, 3}})}}, 3);
  CHECK(single.verdict == Verdict::Verified);
}

TEST_CASE("maximal minors groebner certificates") {
  Instance ex = example(1);
  CHECK(certify_minors_groebner(ex, 0, 1).verdict == Verdict::Verified);
  Instance g24 = generic(4, 1);
  Certificate c = certify_minors_groebner(g24, 5, 42);
  CHECK(c.verdict == Verdict::Verified);
  CHECK(c.parts.size() == 6);
  CHECK(c.conventions["probe_orders"].size() == 5);
  CHECK(certify_minors_groebner(g24, 5, 42).conventions == c.conventions);
}

TEST_CASE("certificate json and exit codes") {
  Certificate v;
  v.claim = "x";
  Certificate f = v;
  f.falsify("closure", {{"pair", {0, 1}}});
  Certificate i = v;
  i.inconclusive("completeness", "variable_cap");
  CHECK(exit_code({v}) == 0);
  CHECK(exit_code({v, i}) == 2);
  CHECK(exit_code({i, f}) == 1);
  auto j = f.to_json(false);
  CHECK(j["verdict"] == "falsified");
  CHECK(j["witness"]["part"] == "closure");
  CHECK_FALSE(j.contains("elapsed_ms"));
  CHECK(i.to_json()["bounds"]["exhausted"] == "variable_cap");
}
