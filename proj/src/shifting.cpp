#include "emc/shifting.hpp"

#include <algorithm>
#include <stdexcept>

#include "emc/claim.hpp"
#include "emc/json_io.hpp"

namespace emc {

ShiftStep::ShiftStep(Element i_, Element j_) : i(i_), j(j_) {
  if (i < 1 || i > kMaxGround || j < 1 || j > kMaxGround)
    throw std::invalid_argument("shift elements must be in 1..64");
  if (i == j) throw std::invalid_argument("shift requires i != j");
}

ShiftSequence::ShiftSequence(std::vector<ShiftStep> steps) : steps_(std::move(steps)) {
  Mask seen_i = 0, seen_j = 0;
  for (const ShiftStep& st : steps_) {
    if (mask_contains(seen_i, st.i)) throw std::invalid_argument("repeated i in shift sequence");
    if (mask_contains(seen_j, st.j)) throw std::invalid_argument("repeated j in shift sequence");
    seen_i |= bit_of(st.i);
    seen_j |= bit_of(st.j);
  }
}

namespace {

Mask shift_one(const SetFamily& f, ShiftStep st, Mask m) {
  if (mask_contains(m, st.i) || !mask_contains(m, st.j)) return m;
  const Mask moved = (m & ~bit_of(st.j)) | bit_of(st.i);
  return f.contains(moved) ? m : moved;
}

}  // namespace

KSet shift_set(const SetFamily& f, ShiftStep step, KSet member) {
  if (step.i > f.params().n || step.j > f.params().n)
    throw std::invalid_argument("shift elements out of range 1..n");
  if (!f.contains(member.mask())) throw InputError("member not in family");
  const Mask out = shift_one(f, step, member.mask());
  if (std::popcount(out) != std::popcount(member.mask()))
    throw ClaimViolation("shift-size-preservation",
                         {{"family", json_of(f)}, {"i", step.i}, {"j", step.j},
                          {"member", elements_of(member.mask())}});
  return KSet(out);
}

SetFamily shift_family(const SetFamily& f, ShiftStep step) {
  if (step.i > f.params().n || step.j > f.params().n)
    throw std::invalid_argument("shift elements out of range 1..n");
  std::vector<Mask> out;
  out.reserve(f.size());
  for (Mask m : f.masks()) out.push_back(shift_one(f, step, m));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ClaimViolation("shift-family-cardinality",
                         {{"family", json_of(f)}, {"i", step.i}, {"j", step.j}});
  return SetFamily(f.params(), std::move(out));
}

ShiftApplication apply_shift_sequence(const SetFamily& f, const ShiftSequence& seq) {
  std::vector<SetFamily> mids;
  mids.reserve(seq.length() + 1);
  mids.push_back(f);
  for (std::size_t p = seq.length(); p >= 1; --p)
    mids.push_back(shift_family(mids.back(), seq.steps()[p - 1]));
  std::vector<bool> triv;
  triv.reserve(mids.size());
  for (const SetFamily& g : mids) triv.push_back(is_trivial(g));
  SetFamily result = mids.back();
  return ShiftApplication{std::move(result), std::move(mids), std::move(triv)};
}

}  // namespace emc
