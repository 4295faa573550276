#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "emc/matching.hpp"
#include "emc/shifting.hpp"

namespace emc {

// Step-4 data: A in F with A n S = 0, B not in F with B n S != 0,
// X = A n B, A' = A \ X, B' = B \ X listed with b1 (in S) first.
struct PairSelection {
  Mask a = 0;
  Mask b = 0;
  Mask x = 0;
  std::vector<Element> a_prime;  // ascending
  std::vector<Element> b_prime;  // b1 first, then ascending
  unsigned r = 0;
  Element b1 = 0;
};

// Step-5 output: A_1..A_t, B_1..B_t with B_p = (A_p \ {J(p)}) u {I(p)},
// A_p = B_{p-1}, and B_t outside the family the chain was built against.
struct ChainResult {
  std::vector<Mask> a_seq;
  std::vector<Mask> b_seq;
  ShiftSequence seq;
  unsigned t = 0;
};

// Every claim checked while one iteration's shift sequence is applied.
// Any false flag aborts the iteration with a ClaimViolation.
struct ProgressAssertions {
  bool b1_count_constant_before_final = true;  // |F_p^{b1}| equal for p >= 1
  bool final_shift_nondecreasing = true;       // |F_0^{b1}| >= |F_1^{b1}|
  bool chain_sets_survive = true;              // A_p in F_p for all p
  bool chain_targets_absent = true;            // B_p not in F_p for all p
  bool b1_count_strictly_increases = true;     // |F_new^{b1}| > |F^{b1}|
  bool phi_strictly_increases = true;
  bool family_size_preserved = true;
  bool s_counts_nondecreasing = true;          // |F_new^i| >= |F^i| for i in S
  bool triviality_monotone = true;             // trivial intermediates stay trivial

  bool all() const {
    return b1_count_constant_before_final && final_shift_nondecreasing &&
           chain_sets_survive && chain_targets_absent && b1_count_strictly_increases &&
           phi_strictly_increases && family_size_preserved && s_counts_nondecreasing &&
           triviality_monotone;
  }
};

struct IterationTrace {
  std::uint64_t phi_before = 0;
  std::uint64_t phi_after = 0;
  Element b1 = 0;
  PairSelection pair;
  ChainResult chain;
  struct ElementCount {
    Element element;
    std::uint64_t before;
    std::uint64_t after;
  };
  std::vector<ElementCount> s_counts;  // per i in S, plus b1's row first
  std::vector<bool> intermediate_trivial;
  ProgressAssertions assertions;
  std::optional<std::uint64_t> nu_before;  // paranoid mode only
  std::optional<std::uint64_t> nu_after;
};

struct CompactionEvent {
  std::size_t after_iterations = 0;
  CompactionResult result;
};

enum class OutcomeKind {
  SubsetOfGStar,           // ground set shrank to sk-1 or fewer elements
  SubsetOfFStar,           // every member meets S
  ContradictionMatching,   // family holds all S-meeting sets yet has an S-free member
};

struct Outcome {
  OutcomeKind kind = OutcomeKind::SubsetOfGStar;
  SetFamily final_family;
  unsigned final_n = 0;
  std::vector<IterationTrace> iterations;
  std::vector<CompactionEvent> compactions;
  std::optional<MatchingCertificate> certificate;  // size-s matching, third kind only
  std::vector<std::uint64_t> phi_history;
  Params original;
  std::uint64_t bound = 0;  // emc_bound(original)
};

struct AlgoOptions {
  // Re-verify nu <= s-1 and nu non-increase after every iteration instead of
  // only at entry and exit. Exponential-cost checks, meant for fuzzing.
  bool paranoid = false;
  // When set, every "pick an arbitrary ..." point (A, B, b1, the chain's
  // j/i picks) draws uniformly from its valid candidates instead of taking
  // the least one. Still fully deterministic for a fixed seed; widens the
  // states a fuzzing campaign can reach.
  std::optional<std::uint64_t> choice_seed;
};

// Smallest member disjoint from S, or nothing when every member meets S.
std::optional<KSet> find_a(const SetFamily& f);

// Smallest k-subset of [n] meeting S that is missing from f, or nothing
// when f holds all of them (the contradiction phase's trigger).
std::optional<KSet> find_b(const SetFamily& f);

PairSelection select_pair(const SetFamily& f, KSet a, KSet b);

// Builds the shift chain: stage 1 fixes i = b1 and scans j in A' ascending
// for an escape (target outside f); later stages scan (j, i) in ascending
// (j, then i) order over the unused A'/B' elements. The no-escape branch
// also takes the least j (and least i). The chain must stop by stage r.
ChainResult build_chain(const SetFamily& f, const PairSelection& pair);

// Applies the chain's shifts (descending position order) while asserting
// every progress claim; exposed separately so deliberately doctored chains
// can demonstrate that the checks fire.
std::pair<SetFamily, IterationTrace> apply_chain_checked(const SetFamily& f,
                                                         const PairSelection& pair,
                                                         const ChainResult& chain,
                                                         const AlgoOptions& opt = {});

// One full pass of steps 2..6 over f.
std::pair<SetFamily, IterationTrace> iterate_once(const SetFamily& f,
                                                  const AlgoOptions& opt = {});

// The full loop: compact, test the three termination conditions in order,
// otherwise iterate. Requires n >= s*k and nu(f) <= s-1 (checked up front;
// violations are input errors carrying the disqualifying certificate).
Outcome run(const SetFamily& f, const AlgoOptions& opt = {});

// The size-s matching {A, B_1..B_{s-1}} witnessing the contradiction when f
// holds every S-meeting k-set yet owns an S-free member A: X of size (s-1)k
// is taken from [n] \ A as S plus the least available elements, then split
// so that B_i n S = {i}.
MatchingCertificate contradiction_certificate(const SetFamily& f, KSet a);

}  // namespace emc
