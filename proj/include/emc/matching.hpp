#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "emc/family.hpp"

namespace emc {

// A pairwise-disjoint list of family members, validated at construction
// against the family it certifies.
class MatchingCertificate {
 public:
  MatchingCertificate(const SetFamily& certified, std::vector<Mask> sets);

  std::span<const Mask> masks() const { return masks_; }
  std::size_t size() const { return masks_.size(); }

  bool operator==(const MatchingCertificate&) const = default;

 private:
  std::vector<Mask> masks_;
};

// Exact nu via branch and bound over the disjointness structure: members in
// ascending bit-vector order, included-first, pruned when the candidates
// left cannot beat the incumbent.
std::uint64_t matching_number(std::span<const Mask> sets);
std::uint64_t matching_number(const SetFamily& f);

// Certificate-producing variant; ties resolve to the lexicographically
// least maximum matching (as a sorted mask list).
MatchingCertificate max_matching(const SetFamily& f);

// Early-exits as soon as s pairwise disjoint members are found.
bool has_s_matching(const SetFamily& f);
std::optional<MatchingCertificate> find_s_matching(const SetFamily& f);

// Independent all-subsets oracle (subset DP over 2^|sets| states); only for
// small families, used to cross-check the branch and bound.
std::uint64_t naive_matching_number(std::span<const Mask> sets);

// Would adding `candidate` to a family with nu <= s-1 create an s-matching?
// Exact: searches for an (s-1)-matching among the members disjoint from it.
bool would_create_s_matching(std::span<const Mask> family, Mask candidate, unsigned s);

// Pulls a matching of the (i,j)-shifted family back into f, preserving its
// size: unaltered matchings pass through; otherwise the altered member is
// replaced by its preimage A1, and if A1 collides with a member B2 (the
// collision can only be {j}), B2 is replaced by (B2 \ {j}) u {i}, which the
// shift's blocking rule forces to lie in f. A missing replacement is
// reported as a claim violation with full evidence, never repaired.
MatchingCertificate pullback_matching(const SetFamily& f, Element i, Element j,
                                      const MatchingCertificate& m_prime);

}  // namespace emc
