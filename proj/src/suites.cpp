#include "emc/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <thread>

#include "emc/algorithm.hpp"
#include "emc/binomial.hpp"
#include "emc/claim.hpp"
#include "emc/json_io.hpp"
#include "emc/matching.hpp"
#include "emc/oracle.hpp"

namespace emc::suites {

using nlohmann::json;

unsigned pool_size(unsigned override_workers) {
  if (override_workers > 0) return override_workers;
  if (const char* env = std::getenv("EMC_LAB_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

std::vector<json> parallel_map_json(std::size_t count, unsigned workers,
                                    const std::function<json(std::size_t)>& fn) {
  std::vector<json> out(count);
  if (count == 0) return out;
  const unsigned nw = static_cast<unsigned>(std::min<std::size_t>(pool_size(workers), count));
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = fn(i);
      } catch (const std::exception& e) {
        out[i] = json{{"worker_error", e.what()}, {"index", i}};
      }
    }
  };
  if (nw <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nw; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  return out;
}

namespace {

template <class Fn>
std::vector<json> parallel_map(std::size_t count, unsigned workers, Fn&& fn) {
  return parallel_map_json(count, workers, std::function<json(std::size_t)>(fn));
}

void require_suite_config(unsigned max_n, unsigned max_k, unsigned max_s) {
  if (max_n < 2 || max_n > kMaxGround || max_k < 1 || max_s < 1)
    throw std::invalid_argument("suite bounds need 2 <= n <= 64, k >= 1, s >= 1");
}

// n, k, s and the family size all derive from the case seed alone.
SetFamily draw_family(const SuiteConfig& cfg, std::uint64_t case_seed, unsigned min_n = 2) {
  std::mt19937_64 rng(case_seed);
  const unsigned n = min_n + static_cast<unsigned>(rng() % (cfg.max_n - min_n + 1));
  const unsigned k = 1 + static_cast<unsigned>(rng() % std::min(cfg.max_k, n));
  const unsigned s = 1 + static_cast<unsigned>(rng() % cfg.max_s);
  const Params p(n, k, s);
  const std::uint64_t room = binomial(n, k);
  const std::uint64_t cap = std::min<std::uint64_t>(cfg.max_family, room);
  const std::size_t size = static_cast<std::size_t>(rng() % (cap + 1));
  return random_family(p, rng(), size);
}

json violation_entry(std::size_t case_index, std::uint64_t seed, const char* what,
                     json detail) {
  return json{{"case", case_index}, {"seed", seed}, {"claim", what},
              {"detail", std::move(detail)}};
}

}  // namespace

std::optional<json> check_shift_case(const SetFamily& f, ShiftStep step,
                                     const SetFamily& shifted, std::uint64_t nu_f) {
  auto fail = [&](const char* claim, json extra = {}) {
    json d{{"family", json_of(f)}, {"i", step.i}, {"j", step.j}, {"claim", claim}};
    if (!extra.is_null()) d["extra"] = std::move(extra);
    return d;
  };

  if (shifted.size() != f.size())
    return fail("cardinality-preserved", {{"shifted_size", shifted.size()}});
  for (Mask m : shifted.masks())
    if (std::popcount(m) != static_cast<int>(f.params().k))
      return fail("member-size-preserved", {{"member", elements_of(m)}});

  const std::uint64_t nu_g = matching_number(shifted);
  if (nu_g > nu_f)
    return fail("matching-number-nonincreasing", {{"nu_f", nu_f}, {"nu_g", nu_g}});

  const MatchingCertificate cert = max_matching(shifted);
  if (cert.size() != nu_g) return fail("max-matching-certificate-size");
  try {
    const MatchingCertificate back = pullback_matching(f, step.i, step.j, cert);
    if (back.size() != cert.size())
      return fail("pullback-size", {{"got", back.size()}, {"want", cert.size()}});
  } catch (const ClaimViolation& cv) {
    return fail(cv.claim().c_str(), cv.evidence());
  } catch (const std::exception& e) {
    return fail("pullback-rejected", {{"what", e.what()}});
  }

  if (f.size() <= 15 && naive_matching_number(shifted.masks()) != nu_g)
    return fail("naive-crosscheck-shifted", {{"nu_bb", nu_g}});
  return std::nullopt;
}

json shift_matching_suite(const SuiteConfig& cfg) {
  require_suite_config(cfg.max_n, cfg.max_k, cfg.max_s);
  std::atomic<std::uint64_t> pairs{0}, pullbacks{0}, naive_checks{0};
  auto results = parallel_map(cfg.cases, cfg.workers, [&](std::size_t c) -> json {
    const std::uint64_t seed = derive_seed(cfg.seed, c);
    const SetFamily f = draw_family(cfg, seed);
    const std::uint64_t nu_f = matching_number(f);
    if (f.size() <= 15 && naive_matching_number(f.masks()) != nu_f)
      return json::array(
          {violation_entry(c, seed, "naive-crosscheck-base", json_of(f))});
    json found = json::array();
    for (Element i = 1; i <= f.params().n; ++i) {
      for (Element j = 1; j <= f.params().n; ++j) {
        if (i == j) continue;
        const ShiftStep step(i, j);
        try {
          const SetFamily shifted = shift_family(f, step);
          pairs.fetch_add(1, std::memory_order_relaxed);
          if (auto v = check_shift_case(f, step, shifted, nu_f))
            found.push_back(violation_entry(c, seed, "shift-case", std::move(*v)));
          pullbacks.fetch_add(1, std::memory_order_relaxed);
          if (f.size() <= 15) naive_checks.fetch_add(1, std::memory_order_relaxed);
        } catch (const ClaimViolation& cv) {
          found.push_back(violation_entry(c, seed, cv.claim().c_str(), cv.evidence()));
        }
      }
    }
    return found;
  });

  json violations = json::array();
  for (auto& r : results) {
    if (r.is_object() && r.contains("worker_error")) {
      violations.push_back(std::move(r));
      continue;
    }
    for (auto& v : r) violations.push_back(std::move(v));
  }
  return json{{"suite", "shift-matching"},
              {"cases", cfg.cases},
              {"pairs", pairs.load()},
              {"checks",
               {{"cardinality", pairs.load()},
                {"member_sizes", pairs.load()},
                {"matching_nonincrease", pairs.load()},
                {"pullback", pullbacks.load()},
                {"naive_crosscheck", naive_checks.load()}}},
              {"violations", std::move(violations)}};
}

json triviality_suite(const SuiteConfig& cfg) {
  require_suite_config(cfg.max_n, cfg.max_k, cfg.max_s);
  std::atomic<std::uint64_t> case_j{0}, case_i{0}, case_other{0};
  auto results = parallel_map(cfg.cases, cfg.workers, [&](std::size_t c) -> json {
    const std::uint64_t seed = derive_seed(cfg.seed, c);
    std::mt19937_64 rng(seed);
    const unsigned n = 2 + static_cast<unsigned>(rng() % (cfg.max_n - 1));
    const unsigned k = 1 + static_cast<unsigned>(rng() % std::min(cfg.max_k, n - 1));
    const unsigned s = 1 + static_cast<unsigned>(rng() % cfg.max_s);
    const Element x = 1 + static_cast<Element>(rng() % n);
    const Params p(n, k, s);

    // sample from the k-sets that avoid x, so x is uncovered by force
    std::vector<Mask> pool;
    for_each_ksubset(n, k, [&](Mask m) {
      if (!mask_contains(m, x)) pool.push_back(m);
      return true;
    });
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng() % i]);
    const std::size_t size =
        static_cast<std::size_t>(rng() % (std::min<std::uint64_t>(cfg.max_family, pool.size()) + 1));
    pool.resize(size);
    const SetFamily f(p, std::move(pool));

    json found = json::array();
    for (Element i = 1; i <= n; ++i) {
      for (Element j = 1; j <= n; ++j) {
        if (i == j) continue;
        const SetFamily g = shift_family(f, ShiftStep(i, j));
        const auto unc = uncovered_elements(g);
        auto has = [&](Element e) {
          return std::find(unc.begin(), unc.end(), e) != unc.end();
        };
        const char* bad = nullptr;
        if (unc.empty()) bad = "triviality-lost";
        if (x == j) {
          case_j.fetch_add(1, std::memory_order_relaxed);
          if (!(g == f)) bad = "case-xj-family-changed";
        } else if (x == i) {
          case_i.fetch_add(1, std::memory_order_relaxed);
          if (!has(j)) bad = "case-xi-j-still-covered";
        } else {
          case_other.fetch_add(1, std::memory_order_relaxed);
          if (!has(x)) bad = "case-other-x-covered";
        }
        if (bad != nullptr)
          found.push_back(violation_entry(
              c, seed, bad,
              json{{"family", json_of(f)}, {"i", i}, {"j", j}, {"x", x}}));
      }
    }
    return found;
  });

  json violations = json::array();
  for (auto& r : results) {
    if (r.is_object() && r.contains("worker_error")) {
      violations.push_back(std::move(r));
      continue;
    }
    for (auto& v : r) violations.push_back(std::move(v));
  }
  return json{{"suite", "triviality"},
              {"cases", cfg.cases},
              {"checks",
               {{"x_equals_j", case_j.load()},
                {"x_equals_i", case_i.load()},
                {"x_elsewhere", case_other.load()}}},
              {"violations", std::move(violations)}};
}

json hunt_campaign(const HuntConfig& cfg) {
  if (cfg.max_n < 1 || cfg.max_n > kMaxGround || cfg.max_k < 1 || cfg.max_s < 1)
    throw std::invalid_argument("hunt bounds need 1 <= n <= 64, k >= 1, s >= 1");
  auto results = parallel_map(cfg.runs, cfg.workers, [&](std::size_t c) -> json {
    const std::uint64_t seed = derive_seed(cfg.seed, c);
    std::mt19937_64 rng(seed);
    unsigned k = 0, s = 0;
    do {
      k = 1 + static_cast<unsigned>(rng() % cfg.max_k);
      s = 1 + static_cast<unsigned>(rng() % cfg.max_s);
    } while (s * k > cfg.max_n);
    const unsigned n =
        s * k + static_cast<unsigned>(rng() % (cfg.max_n - s * k + 1));
    const Params p(n, k, s);
    const std::uint64_t room = binomial(n, k);
    const std::size_t target = static_cast<std::size_t>(rng() % (room + 1));
    const SetFamily f = random_matching_free_family(p, rng(), target);

    // odd runs re-resolve every "arbitrary" choice uniformly at random
    // (seeded), widening the reachable states; even runs stay on the
    // least-element rule
    AlgoOptions opt;
    opt.paranoid = cfg.paranoid;
    if (c % 2 == 1) opt.choice_seed = rng();
    json rec{{"run", c}, {"seed", seed}, {"params", json_of(p)},
             {"family_size", f.size()},
             {"choices", opt.choice_seed ? "random" : "least"}};
    try {
      const Outcome o = run(f, opt);
      rec["kind"] = to_string(o.kind);
      rec["iterations"] = o.iterations.size();
      rec["final_size"] = o.final_family.size();
      rec["bound"] = o.bound;
      if (o.kind == OutcomeKind::ContradictionMatching)
        rec["certificate"] = json_of(*o.certificate);
      if (o.iterations.size() > binomial(n, k))
        rec["violation"] = json{{"claim", "iteration-count-exceeds-binomial"}};
      if (o.final_family.size() > o.bound)
        rec["violation"] = json{{"claim", "terminal-bound-exceeded"}};
    } catch (const ClaimViolation& cv) {
      rec["violation"] = json{{"claim", cv.claim()}, {"evidence", cv.evidence()},
                              {"family", json_of(f)}};
    }
    return rec;
  });

  json kinds{{"SubsetOfGStar", 0}, {"SubsetOfFStar", 0}, {"ContradictionMatching", 0}};
  std::uint64_t total_iters = 0;
  json violations = json::array();
  json assertion_failures = json::object();
  for (auto& r : results) {
    if (r.contains("worker_error")) {
      violations.push_back(r);
      continue;
    }
    if (r.contains("kind")) {
      kinds[r["kind"].get<std::string>()] = kinds[r["kind"].get<std::string>()].get<int>() + 1;
      total_iters += r["iterations"].get<std::uint64_t>();
    }
    if (r.contains("violation")) {
      const std::string claim = r["violation"]["claim"].get<std::string>();
      assertion_failures[claim] =
          (assertion_failures.contains(claim) ? assertion_failures[claim].get<int>() : 0) + 1;
      violations.push_back(r);
    }
  }
  return json{{"suite", "hunt"},
              {"runs", cfg.runs},
              {"paranoid", cfg.paranoid},
              {"outcomes", std::move(kinds)},
              {"iterations_total", total_iters},
              {"assertion_failures", std::move(assertion_failures)},
              {"violations", std::move(violations)}};
}

}  // namespace emc::suites
