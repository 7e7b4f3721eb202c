#include <algorithm>
#include <map>

#include "detrees/poly/text.hpp"
#include "detrees/verify/certify.hpp"

namespace detrees::verify {

using poly::Monomial;
using poly::VarIndex;

std::vector<std::vector<Monomial>> initial_generators(const Instance& inst) {
  std::vector<Monomial> gens;
  for (const det::ColumnTuple& c : inst.index_set()) gens.push_back(inst.initial_minor(c));
  return std::vector<std::vector<Monomial>>(static_cast<std::size_t>(inst.r()), gens);
}

namespace {

struct Factored {
  std::vector<std::pair<std::size_t, std::size_t>> factors;   // (component, generator)
  Monomial product;
};

// Every gamma with |gamma| <= left.
void each_gamma(std::size_t r, std::vector<int>& g, std::size_t pos, int left, std::vector<std::vector<int>>& out) {
  if (pos == r) {
    out.push_back(g);
    return;
  }
  for (int k = 0; k <= left; ++k) {
    g[pos] = k;
    each_gamma(r, g, pos + 1, left - k, out);
  }
  g[pos] = 0;
}

void each_factored(const std::vector<std::vector<Monomial>>& comps, const std::vector<int>& gamma, std::size_t comp,
                   int placed, std::size_t from, Factored& acc, std::vector<Factored>& out) {
  if (comp == comps.size()) {
    out.push_back(acc);
    return;
  }
  if (placed == gamma[comp]) {
    each_factored(comps, gamma, comp + 1, 0, 0, acc, out);
    return;
  }
  for (std::size_t j = from; j < comps[comp].size(); ++j) {
    Monomial saved = acc.product;
    acc.factors.emplace_back(comp, j);
    acc.product = acc.product * comps[comp][j];
    each_factored(comps, gamma, comp, placed + 1, j, acc, out);
    acc.factors.pop_back();
    acc.product = std::move(saved);
  }
}

}  // namespace

Certificate check_l_exchange(const poly::Ring& ring, const std::vector<std::vector<Monomial>>& components,
                             int gamma_bound) {
  Stopwatch clock;
  Certificate cert;
  cert.claim = "l-exchange";
  cert.order = "tau";
  cert.bounds["gamma"] = gamma_bound;
  cert.conventions["generators"] = "each component sorted descending under tau";

  std::vector<std::vector<Monomial>> comps = components;
  const std::vector<VarIndex> rank = poly::tau_ranking(ring);
  std::vector<std::size_t> position(ring.size(), rank.size());
  for (std::size_t i = 0; i < rank.size(); ++i) position[rank[i]] = i;
  auto tau_greater = [&](const Monomial& a, const Monomial& b) {
    for (VarIndex v : rank) {
      if (a[v] != b[v]) return a[v] > b[v];
    }
    return false;
  };
  for (auto& c : comps) std::sort(c.begin(), c.end(), tau_greater);

  // exchangeable[(i, j, x0)]: some x1 < x0 with x1 | g_ij and x0 g_ij / x1 in J_i.
  std::map<std::tuple<std::size_t, std::size_t, VarIndex>, bool> cache;
  auto exchangeable = [&](std::size_t i, std::size_t j, VarIndex x0) {
    auto key = std::make_tuple(i, j, x0);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const Monomial& g = comps[i][j];
    bool ok = false;
    for (std::size_t p = position[x0] + 1; p < rank.size() && !ok; ++p) {
      VarIndex x1 = rank[p];
      if (g[x1] == 0) continue;
      Monomial h = g * Monomial::variable(ring.size(), x0) / Monomial::variable(ring.size(), x1);
      ok = std::any_of(comps[i].begin(), comps[i].end(), [&](const Monomial& f) { return f.divides(h); });
    }
    cache.emplace(key, ok);
    return ok;
  };

  std::vector<std::vector<int>> gammas;
  std::vector<int> scratch(comps.size(), 0);
  each_gamma(comps.size(), scratch, 0, gamma_bound, gammas);
  std::size_t tested = 0;
  cert.parts["exchange"] = "verified_within_bound";
  for (const std::vector<int>& gamma : gammas) {
    int total = 0;
    for (int g : gamma) total += g;
    if (total == 0) continue;
    std::vector<Factored> us;
    Factored acc{{}, Monomial(ring.size())};
    each_factored(comps, gamma, 0, 0, 0, acc, us);
    std::vector<Monomial> vs;
    for (const Factored& f : us) vs.push_back(f.product);
    std::sort(vs.begin(), vs.end(), [](const Monomial& a, const Monomial& b) { return a.key_less(b); });
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (const Factored& u : us) {
      for (const Monomial& v : vs) {
        VarIndex x0 = 0;
        bool differs = false;
        for (VarIndex x : rank) {
          if (u.product[x] != v[x]) {
            x0 = x;
            differs = true;
            break;
          }
        }
        if (!differs || u.product[x0] > v[x0]) continue;
        ++tested;
        bool ok = std::any_of(u.factors.begin(), u.factors.end(),
                              [&](const auto& f) { return exchangeable(f.first, f.second, x0); });
        if (ok) continue;
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& [i, j] : u.factors) {
          factors.push_back({{"component", i + 1}, {"generator", poly::to_string(comps[i][j], ring)}});
        }
        const poly::Variable& x = ring.var(x0);
        cert.falsify("exchange", {{"gamma", gamma},
                                  {"u", poly::to_string(u.product, ring)},
                                  {"u_factors", factors},
                                  {"v", poly::to_string(v, ring)},
                                  {"l0", x.row},
                                  {"k0", x.col}});
        cert.bounds["pairs_tested"] = tested;
        cert.elapsed_ms = clock.ms();
        return cert;
      }
    }
  }
  cert.bounds["pairs_tested"] = tested;
  cert.elapsed_ms = clock.ms();
  return cert;
}

}  // namespace detrees::verify
