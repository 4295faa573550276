#pragma once

#include <vector>

#include "emc/family.hpp"

namespace emc {

// One (i,j) shift: i comes in, j goes out. i == j is rejected outright.
struct ShiftStep {
  Element i;
  Element j;
  ShiftStep(Element i_, Element j_);
  bool operator==(const ShiftStep&) const = default;
};

// The (I, J) pairs of a chain, position p = 1..t. All I entries are distinct
// and all J entries are distinct.
class ShiftSequence {
 public:
  ShiftSequence() = default;
  explicit ShiftSequence(std::vector<ShiftStep> steps);

  std::span<const ShiftStep> steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }

  bool operator==(const ShiftSequence&) const = default;

 private:
  std::vector<ShiftStep> steps_;
};

// C_ij applied to one member of f: (member \ {j}) u {i} when i is absent,
// j present and the replacement missing from f; the member itself otherwise.
KSet shift_set(const SetFamily& f, ShiftStep step, KSet member);

// C_ij applied to the whole family. Decisions are made against the original
// family for every member first, then the result is materialized; the
// cardinality |C_ij(F)| = |F| is enforced as a runtime claim check.
SetFamily shift_family(const SetFamily& f, ShiftStep step);

struct ShiftApplication {
  SetFamily result;                     // F_0
  std::vector<SetFamily> intermediates;  // F_t, F_{t-1}, ..., F_0
  std::vector<bool> trivial;             // triviality flag per intermediate
};

// Applies the steps in descending position order (p = t down to 1).
ShiftApplication apply_shift_sequence(const SetFamily& f, const ShiftSequence& seq);

}  // namespace emc
