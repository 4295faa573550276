// Acceptance suite: one line per criterion, PASS or FAIL, nonzero exit when
// anything fails. Criteria can be selected by number on the command line.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "emc/algorithm.hpp"
#include "emc/binomial.hpp"
#include "emc/claim.hpp"
#include "emc/cli.hpp"
#include "emc/json_io.hpp"
#include "emc/matching.hpp"
#include "emc/oracle.hpp"
#include "emc/suites.hpp"

using namespace emc;
using nlohmann::json;

namespace {

constexpr std::uint64_t kSuiteSeed = 20260810;
constexpr std::size_t kSuiteCases = 5000;
constexpr std::size_t kHuntRuns = 10000;
constexpr std::uint64_t kOracleBudget = 400'000'000;

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

suites::SuiteConfig corpus_config() {
  suites::SuiteConfig sc;
  sc.max_n = 10;
  sc.max_k = 3;
  sc.max_s = 3;
  sc.max_family = 20;
  sc.cases = kSuiteCases;
  sc.seed = kSuiteSeed;
  return sc;
}

const json& shift_suite_report() {
  static const json report = suites::shift_matching_suite(corpus_config());
  return report;
}

std::size_t count_violations(const json& report, bool pullback_related) {
  std::size_t c = 0;
  for (const auto& v : report["violations"]) {
    const std::string claim =
        v.contains("detail") && v["detail"].contains("claim")
            ? v["detail"]["claim"].get<std::string>()
            : v["claim"].get<std::string>();
    const bool is_pullback = claim.rfind("pullback", 0) == 0;
    if (is_pullback == pullback_related) ++c;
  }
  return c;
}

void criterion1() {
  const json& r = shift_suite_report();
  const std::size_t bad = count_violations(r, false);
  std::ostringstream d;
  d << "shift conservation + matching non-increase over " << r["cases"] << " families / "
    << r["pairs"] << " shifts, naive cross-checks " << r["checks"]["naive_crosscheck"]
    << ", violations " << bad;
  report(1, bad == 0, d.str());
}

void criterion2() {
  const json& r = shift_suite_report();
  const std::size_t bad = count_violations(r, true);
  std::ostringstream d;
  d << "matching pullback over " << r["checks"]["pullback"] << " shifted maxima, violations "
    << bad;
  report(2, bad == 0, d.str());
}

void criterion3() {
  const json r = suites::triviality_suite(corpus_config());
  std::ostringstream d;
  d << "triviality preservation over " << r["cases"] << " forced-uncovered families (x=j "
    << r["checks"]["x_equals_j"] << ", x=i " << r["checks"]["x_equals_i"] << ", other "
    << r["checks"]["x_elsewhere"] << "), violations " << r["violations"].size();
  report(3, r["violations"].empty(), d.str());
}

void criterion4() {
  std::vector<Params> grid;
  for (unsigned s : {2u, 3u})
    for (unsigned n = s * 2; n <= 8; ++n) grid.push_back(Params(n, 2, s));
  for (unsigned n = 6; n <= 7; ++n) grid.push_back(Params(n, 3, 2));
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned s = 1; s <= n; ++s) grid.push_back(Params(n, 1, s));

  bool ok = true;
  std::string first_bad;
  const std::vector<json> rows = suites::parallel_map_json(
      grid.size(), 0, [&](std::size_t i) -> json {
        const Params p = grid[i];
        json row{{"n", p.n}, {"k", p.k}, {"s", p.s}};
        try {
          const OracleResult d = f_direct(p, kOracleBudget);
          const OracleResult c = f_covering(p, kOracleBudget);
          row["direct"] = d.conclusive ? json(d.value) : json("inconclusive");
          row["covering"] = c.conclusive ? json(c.value) : json("inconclusive");
          row["bound"] = emc_bound(p);
          row["ok"] = d.conclusive && c.conclusive && d.value == c.value &&
                      d.value == emc_bound(p) && d.value <= frankl_upper_bound(p);
        } catch (const std::exception& e) {
          row["ok"] = false;
          row["error"] = e.what();
        }
        return row;
      });
  for (const auto& row : rows) {
    if (!row["ok"].get<bool>() && first_bad.empty()) first_bad = row.dump();
    ok = ok && row["ok"].get<bool>();
  }

  // the s=2 line and the n=sk boundary values, via the curated table
  for (const KnownValue& kv : known_values()) {
    bool in_grid = false;
    for (const Params& p : grid) in_grid |= p == kv.params;
    if (!in_grid) continue;
    if (emc_bound(kv.params) != kv.value) {
      ok = false;
      if (first_bad.empty()) first_bad = "known value mismatch " + json_of(kv.params).dump();
    }
  }

  std::ostringstream d;
  d << "both oracles conclusive and equal to the bound on " << grid.size() << " grid points";
  if (!ok) d << "; first failure " << first_bad;
  report(4, ok, d.str());
}

void criterion5() {
  suites::HuntConfig hc;
  hc.max_n = 10;
  hc.max_k = 3;
  hc.max_s = 3;
  hc.runs = kHuntRuns;
  hc.seed = kSuiteSeed;
  hc.paranoid = true;
  const json r = suites::hunt_campaign(hc);

  const std::size_t violations = r["violations"].size();
  const std::size_t cond3 = r["outcomes"]["ContradictionMatching"].get<std::size_t>();
  std::ostringstream d;
  d << kHuntRuns << " paranoid runs: outcomes " << r["outcomes"].dump() << ", violations "
    << violations;
  if (violations > 0) {
    std::ofstream ev("acceptance_hunt_report.json", std::ios::binary);
    ev << r.dump(2) << "\n";
    d << " (all assertion failures: " << r["assertion_failures"].dump()
      << "; evidence in acceptance_hunt_report.json; every violating run is a"
         " deterministic replay of its recorded seed)";
  }
  report(5, violations == 0 && cond3 == 0, d.str());
}

void criterion6() {
  bool ok = true;
  std::ostringstream d;

  {
    std::vector<Mask> masks{mask_of({1, 2}), mask_of({2, 3}), mask_of({2, 4}),
                            mask_of({2, 5})};
    const SetFamily star2(Params(5, 2, 2), std::move(masks));
    const Outcome o = run(star2);
    const bool star_ok =
        o.kind == OutcomeKind::SubsetOfFStar && o.iterations.size() == 1 &&
        o.iterations[0].chain.seq.steps().size() == 1 &&
        o.iterations[0].chain.seq.steps()[0] == ShiftStep(1, 2) &&
        o.phi_history == std::vector<std::uint64_t>{1, 4} && o.bound == 4 &&
        o.final_family.size() == 4 && potential(o.final_family) == 4 &&
        o.bound == binomial(5, 2) - binomial(4, 2);
    ok = ok && star_ok;
    d << "star-at-2: one iteration, shift (1,2), phi 1->4, bound 4"
      << (star_ok ? "" : " [MISMATCH]");
  }
  {
    std::vector<Mask> masks{mask_of({2, 3}), mask_of({2, 4}), mask_of({3, 4})};
    const SetFamily tri(Params(4, 2, 2), std::move(masks));
    const Outcome o = run(tri);
    const bool tri_ok = o.kind == OutcomeKind::SubsetOfGStar && o.compactions.size() == 1 &&
                        o.final_n == 3 && o.final_family.size() == 3 &&
                        binomial(3, 2) == 3 && o.final_family.size() <= 3;
    ok = ok && tri_ok;
    d << "; triangle: compaction to n'=3, clique outcome, bound 3"
      << (tri_ok ? "" : " [MISMATCH]");
  }
  report(6, ok, d.str());
}

void criterion7() {
  bool ok = true;

  suites::HuntConfig hc;
  hc.max_n = 9;
  hc.max_k = 3;
  hc.max_s = 3;
  hc.runs = 500;
  hc.seed = 77;
  const std::string h1 = suites::hunt_campaign(hc).dump();
  const std::string h2 = suites::hunt_campaign(hc).dump();
  ok = ok && h1 == h2;

  suites::SuiteConfig sc = corpus_config();
  sc.cases = 150;
  const std::string l1 = suites::shift_matching_suite(sc).dump();
  const std::string l2 = suites::shift_matching_suite(sc).dump();
  ok = ok && l1 == l2;

  std::vector<Mask> masks{mask_of({1, 2}), mask_of({2, 3}), mask_of({2, 4}), mask_of({2, 5})};
  const SetFamily star2(Params(5, 2, 2), std::move(masks));
  const std::string o1 = json_of(run(star2)).dump();
  const std::string o2 = json_of(run(star2)).dump();
  ok = ok && o1 == o2;

  report(7, ok, "byte-identical reports for repeated seeded campaigns and runs");
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty()) which = {1, 2, 3, 4, 5, 6, 7};

  for (int c : which) {
    switch (c) {
      case 1: criterion1(); break;
      case 2: criterion2(); break;
      case 3: criterion3(); break;
      case 4: criterion4(); break;
      case 5: criterion5(); break;
      case 6: criterion6(); break;
      case 7: criterion7(); break;
      default:
        std::fprintf(stderr, "unknown criterion %d\n", c);
        return 1;
    }
  }
  return g_failures == 0 ? 0 : 1;
}
