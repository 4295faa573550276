#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emc/family.hpp"

namespace emc {

enum class OracleMethod { Direct, Covering };

// Exact f(n,k,s) when conclusive; otherwise `value` is only the best lower
// bound reached before the step budget ran out. A witness is always a
// verified s-matching-free family of size `value`.
struct OracleResult {
  Params params;
  std::uint64_t value = 0;
  SetFamily witness;
  OracleMethod method = OracleMethod::Direct;
  bool conclusive = false;
  std::uint64_t steps = 0;
};

// Primal search: branch and bound over inclusion of each k-set in ascending
// order, rejecting any inclusion that creates an s-matching and pruning
// branches that cannot beat the incumbent. budget counts elementary steps;
// 0 means "no override", which is only accepted when C(n,k) <= 24.
OracleResult f_direct(const Params& p, std::uint64_t budget = 0);

// Dual reformulation: f = C(n,k) - tau where tau is the minimum number of
// k-sets hitting every s-matching. Exact hitting-set branch and bound over
// the enumerated s-matching hypergraph. Same budget convention.
OracleResult f_covering(const Params& p, std::uint64_t budget = 0);

// Greedy randomized construction: all k-sets are shuffled by the seed and
// inserted unless the insertion creates an s-matching; stops at target_size
// or exhaustion. The output satisfies nu <= s-1 by construction.
SetFamily random_matching_free_family(const Params& p, std::uint64_t seed,
                                      std::size_t target_size);

// Unconstrained seeded sample of `size` distinct k-sets (suite input maker).
SetFamily random_family(const Params& p, std::uint64_t seed, std::size_t size);

struct KnownValue {
  Params params;
  std::uint64_t value;
  std::string provenance;
};

// Curated exact values: the s=2 line f(n,k,2) = C(n-1,k-1) and the boundary
// points n = sk where f = C(sk-1,k).
std::vector<KnownValue> known_values();

// (s-1) * C(n-1,k-1): every exact value must sit at or below this.
std::uint64_t frankl_upper_bound(const Params& p);

// All randomness in the toolkit flows from one master seed through
// splitmix64; case c uses mt19937_64(derive_seed(master, c)).
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace emc
