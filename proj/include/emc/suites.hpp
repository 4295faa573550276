#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "json.hpp"

#include "emc/family.hpp"
#include "emc/shifting.hpp"

namespace emc::suites {

// Worker count: explicit override, else EMC_LAB_WORKERS, else hardware.
unsigned pool_size(unsigned override_workers = 0);

// Fans fn(i) out over the pool; slot i of the result always holds fn(i),
// so reports stay byte-identical regardless of scheduling.
std::vector<nlohmann::json> parallel_map_json(
    std::size_t count, unsigned workers,
    const std::function<nlohmann::json(std::size_t)>& fn);

struct SuiteConfig {
  unsigned max_n = 8;
  unsigned max_k = 3;
  unsigned max_s = 3;
  std::size_t cases = 5000;
  std::size_t max_family = 20;
  std::uint64_t seed = 1;
  unsigned workers = 0;
};

// One shift's worth of cardinality/uniformity/matching checks, callable with
// an externally produced "shifted" family so that deliberately broken shift
// implementations can be shown to trip the suite.
std::optional<nlohmann::json> check_shift_case(const SetFamily& f, ShiftStep step,
                                               const SetFamily& shifted,
                                               std::uint64_t nu_f);

// Shift-conservation and matching-pullback suite over seeded random
// families and all (i,j) pairs. Report: {"cases","pairs","checks",
// "violations":[..]}; zero violations is the healthy outcome.
nlohmann::json shift_matching_suite(const SuiteConfig& cfg);

// Triviality-preservation suite over forced-uncovered families, with the
// per-case witness (x=j: family unchanged; x=i: j uncovered after; else: x
// still uncovered) checked for every pair.
nlohmann::json triviality_suite(const SuiteConfig& cfg);

struct HuntConfig {
  unsigned max_n = 10;
  unsigned max_k = 3;
  unsigned max_s = 3;
  std::size_t runs = 10000;
  std::uint64_t seed = 1;
  bool paranoid = true;
  unsigned workers = 0;
};

// Fuzzing campaign: random s-matching-free families, full algorithm runs in
// paranoid mode, every claim check armed. Violations are findings, recorded
// with enough evidence to replay.
nlohmann::json hunt_campaign(const HuntConfig& cfg);

}  // namespace emc::suites
