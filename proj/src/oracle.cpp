#include "emc/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "emc/binomial.hpp"
#include "emc/claim.hpp"
#include "emc/json_io.hpp"
#include "emc/matching.hpp"

namespace emc {

namespace {

constexpr std::uint64_t kDefaultSteps = 1u << 28;

std::vector<Mask> universe_of(const Params& p) {
  std::vector<Mask> u;
  for_each_ksubset(p.n, p.k, [&](Mask m) {
    u.push_back(m);
    return true;
  });
  return u;
}

void verify_witness(const Params& p, const std::vector<Mask>& masks) {
  SetFamily w(p, masks);
  if (has_s_matching(w))
    throw ClaimViolation("oracle-witness-invalid", {{"family", json_of(w)}});
}

struct Budget {
  std::uint64_t left;
  bool exhausted = false;
  bool spend(std::uint64_t units = 1) {
    if (exhausted || units > left) {
      exhausted = true;
      return false;
    }
    left -= units;
    return true;
  }
};

std::uint64_t resolve_budget(const Params& p, std::uint64_t budget) {
  if (budget != 0) return budget;
  if (binomial(p.n, p.k) > 24)
    throw std::invalid_argument("C(n,k) > 24: pass an explicit step budget");
  return kDefaultSteps;
}

// Fisher-Yates with plain modulo draws; biased in theory, but fully
// reproducible across platforms, which is what matters here.
template <class T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng() % i]);
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t st = master + 0x9E3779B97F4A7C15ull * (index + 1);
  return splitmix64(st);
}

OracleResult f_direct(const Params& p, std::uint64_t budget) {
  const std::uint64_t total_budget = resolve_budget(p, budget);
  Budget steps{total_budget};
  const std::vector<Mask> universe = universe_of(p);

  std::vector<Mask> best_set;
  if (p.in_theorem_range()) {
    // Seed the incumbent with the two canonical constructions so the search
    // mostly has to prove optimality.
    const SetFamily fs = make_f_star(p);
    const SetFamily gs = make_g_star(p);
    const SetFamily& seed = fs.size() >= gs.size() ? fs : gs;
    if (has_s_matching(seed))
      throw ClaimViolation("oracle-seed-invalid", {{"family", json_of(seed)}});
    best_set.assign(seed.masks().begin(), seed.masks().end());
  } else {
    // n < sk: even the full universe has no s-matching.
    best_set = universe;
  }
  std::size_t best = best_set.size();

  std::vector<Mask> chosen;
  chosen.reserve(universe.size());
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    if (!steps.spend()) return;
    if (chosen.size() > best) {
      best = chosen.size();
      best_set = chosen;
    }
    for (std::size_t i = from; i < universe.size(); ++i) {
      if (steps.exhausted) return;
      if (chosen.size() + (universe.size() - i) <= best) break;
      if (!steps.spend()) return;
      if (!would_create_s_matching(chosen, universe[i], p.s)) {
        chosen.push_back(universe[i]);
        self(self, i + 1);
        chosen.pop_back();
      }
    }
  };
  dfs(dfs, 0);

  verify_witness(p, best_set);
  return OracleResult{p, best, SetFamily(p, std::move(best_set)), OracleMethod::Direct,
                      !steps.exhausted, total_budget - steps.left};
}

OracleResult f_covering(const Params& p, std::uint64_t budget) {
  const std::uint64_t total_budget = resolve_budget(p, budget);
  Budget steps{total_budget};
  const std::vector<Mask> universe = universe_of(p);
  const std::uint64_t total = universe.size();

  // Enumerate the s-matching hypergraph: each edge is an s-tuple of indices
  // of pairwise disjoint k-sets. Hard cap keeps a huge budget from turning
  // into a huge allocation.
  constexpr std::size_t kMaxEdges = 4'000'000;
  std::vector<std::vector<std::uint32_t>> edges;
  {
    std::vector<std::uint32_t> cur;
    auto enumerate = [&](auto&& self, std::size_t from, Mask used) -> void {
      if (steps.exhausted) return;
      if (cur.size() == p.s) {
        if (edges.size() >= kMaxEdges) {
          steps.exhausted = true;
          return;
        }
        edges.push_back(cur);
        return;
      }
      for (std::size_t i = from; i < universe.size(); ++i) {
        if (!steps.spend()) return;
        if (cur.size() + (universe.size() - i) < p.s) break;
        if ((universe[i] & used) != 0) continue;
        cur.push_back(static_cast<std::uint32_t>(i));
        self(self, i + 1, used | universe[i]);
        cur.pop_back();
      }
    };
    enumerate(enumerate, 0, 0);
  }

  // Enumeration died: nothing trustworthy to report.
  if (steps.exhausted)
    return OracleResult{p, 0, SetFamily(p, {}), OracleMethod::Covering, false,
                        total_budget - steps.left};

  if (edges.empty()) {
    verify_witness(p, universe);
    return OracleResult{p, total, SetFamily(p, universe), OracleMethod::Covering, true,
                        total_budget - steps.left};
  }

  std::vector<std::vector<std::uint32_t>> incident(universe.size());
  for (std::uint32_t e = 0; e < edges.size(); ++e)
    for (std::uint32_t u : edges[e]) incident[u].push_back(e);

  // Greedy transversal for the initial incumbent: repeatedly remove the
  // k-set covering the most uncovered edges (lowest index on ties).
  std::vector<std::uint32_t> best_tr;
  {
    std::vector<unsigned> cov(edges.size(), 0);
    std::size_t uncovered = edges.size();
    while (uncovered > 0) {
      std::size_t best_u = 0, best_gain = 0;
      for (std::size_t u = 0; u < universe.size(); ++u) {
        std::size_t gain = 0;
        for (std::uint32_t e : incident[u]) gain += cov[e] == 0;
        if (gain > best_gain) {
          best_gain = gain;
          best_u = u;
        }
      }
      best_tr.push_back(static_cast<std::uint32_t>(best_u));
      for (std::uint32_t e : incident[best_u]) {
        if (cov[e]++ == 0) --uncovered;
      }
    }
    std::sort(best_tr.begin(), best_tr.end());
  }
  std::size_t best_tau = best_tr.size();

  // Exact branch and bound: branch over which member of an uncovered edge
  // (the one with the fewest allowed members) joins the transversal; members
  // tried earlier are banned deeper in, so no transversal is seen twice.
  std::vector<unsigned> cov(edges.size(), 0);
  std::vector<unsigned char> banned(universe.size(), 0);
  std::vector<std::uint32_t> tr;

  // Greedy packing of set-disjoint uncovered edges; each needs its own
  // hitter, so the packing size lower-bounds the remaining transversal.
  std::vector<std::uint32_t> pack_stamp(universe.size(), 0);
  std::uint32_t pack_gen = 0;
  auto packing_bound = [&]() -> std::size_t {
    std::size_t lb = 0;
    ++pack_gen;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (cov[e] != 0) continue;
      bool clash = false;
      for (std::uint32_t u : edges[e])
        if (pack_stamp[u] == pack_gen) {
          clash = true;
          break;
        }
      if (clash) continue;
      for (std::uint32_t u : edges[e]) pack_stamp[u] = pack_gen;
      ++lb;
    }
    return lb;
  };

  auto dfs = [&](auto&& self) -> void {
    if (!steps.spend()) return;
    // fail-first: pick the uncovered edge with the fewest unbanned members
    std::size_t pick = edges.size();
    std::size_t pick_width = ~std::size_t{0};
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (cov[e] != 0) continue;
      std::size_t width = 0;
      for (std::uint32_t u : edges[e]) width += !banned[u];
      if (width < pick_width) {
        pick_width = width;
        pick = e;
        if (width <= 1) break;
      }
    }
    if (pick == edges.size()) {  // everything covered
      if (tr.size() < best_tau) {
        best_tau = tr.size();
        best_tr = tr;
        std::sort(best_tr.begin(), best_tr.end());
      }
      return;
    }
    if (pick_width == 0) return;  // dead branch
    if (tr.size() + 1 >= best_tau) return;
    if (tr.size() + packing_bound() >= best_tau) return;

    std::vector<std::uint32_t> local_banned;
    for (std::uint32_t u : edges[pick]) {
      if (banned[u]) continue;
      if (steps.exhausted) break;
      tr.push_back(u);
      for (std::uint32_t e : incident[u]) ++cov[e];
      self(self);
      for (std::uint32_t e : incident[u]) --cov[e];
      tr.pop_back();
      banned[u] = 1;
      local_banned.push_back(u);
    }
    for (std::uint32_t u : local_banned) banned[u] = 0;
  };
  dfs(dfs);

  // Even if the search ran out of budget, best_tr hits every enumerated
  // edge (and enumeration completed), so its complement is a valid witness
  // and total - best_tau a sound lower bound for f.
  std::vector<Mask> witness;
  witness.reserve(total - best_tau);
  std::size_t tri = 0;
  for (std::uint32_t u = 0; u < universe.size(); ++u) {
    if (tri < best_tr.size() && best_tr[tri] == u) {
      ++tri;
      continue;
    }
    witness.push_back(universe[u]);
  }
  verify_witness(p, witness);
  return OracleResult{p, total - best_tau, SetFamily(p, std::move(witness)),
                      OracleMethod::Covering, !steps.exhausted, total_budget - steps.left};
}

SetFamily random_matching_free_family(const Params& p, std::uint64_t seed,
                                      std::size_t target_size) {
  std::mt19937_64 rng(seed);
  std::vector<Mask> order = universe_of(p);
  seeded_shuffle(order, rng);
  std::vector<Mask> picked;
  for (Mask m : order) {
    if (picked.size() >= target_size) break;
    if (!would_create_s_matching(picked, m, p.s)) picked.push_back(m);
  }
  return SetFamily(p, std::move(picked));
}

SetFamily random_family(const Params& p, std::uint64_t seed, std::size_t size) {
  std::mt19937_64 rng(seed);
  std::vector<Mask> order = universe_of(p);
  seeded_shuffle(order, rng);
  if (order.size() > size) order.resize(size);
  return SetFamily(p, std::move(order));
}

std::vector<KnownValue> known_values() {
  std::vector<KnownValue> t;
  for (unsigned n = 2; n <= 8; ++n) t.push_back({Params(n, 1, 2), 1, "s=2 line"});
  for (unsigned n = 4; n <= 8; ++n)
    t.push_back({Params(n, 2, 2), binomial(n - 1, 1), "s=2 line"});
  for (unsigned n = 6; n <= 7; ++n)
    t.push_back({Params(n, 3, 2), binomial(n - 1, 2), "s=2 line"});
  for (unsigned s = 2; s <= 8; ++s)
    t.push_back({Params(s, 1, s), s - 1, "n=sk boundary"});
  t.push_back({Params(4, 2, 2), 3, "n=sk boundary"});
  t.push_back({Params(6, 2, 3), 10, "n=sk boundary"});
  t.push_back({Params(8, 2, 4), binomial(7, 2), "n=sk boundary"});
  t.push_back({Params(6, 3, 2), 10, "n=sk boundary"});
  return t;
}

std::uint64_t frankl_upper_bound(const Params& p) {
  return static_cast<std::uint64_t>(p.s - 1) * binomial(p.n - 1, p.k - 1);
}

}  // namespace emc
