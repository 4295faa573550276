#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "emc/bits.hpp"

namespace emc {

// Ground-set parameters (n, k, s). The fixed set S is always {1, ..., s-1};
// it is derived, never stored. n may drop to 0 after compacting an empty
// family; the theorem-scope entry points require n >= s*k themselves.
struct Params {
  unsigned n = 0;
  unsigned k = 1;
  unsigned s = 1;

  Params() = default;
  Params(unsigned n_, unsigned k_, unsigned s_);

  Mask s_mask() const { return full_mask(s - 1); }
  Mask ground_mask() const { return full_mask(n); }
  bool in_theorem_range() const { return n >= static_cast<unsigned long long>(s) * k; }
  bool operator==(const Params&) const = default;
};

// One k-subset of the ground set as a single-word bit vector.
class KSet {
 public:
  KSet() = default;
  explicit KSet(Mask m) : mask_(m) {}

  Mask mask() const { return mask_; }
  unsigned size() const { return static_cast<unsigned>(std::popcount(mask_)); }
  bool contains(Element e) const { return mask_contains(mask_, e); }
  std::vector<Element> elements() const { return elements_of(mask_); }

  auto operator<=>(const KSet&) const = default;

 private:
  Mask mask_ = 0;
};

// A duplicate-free k-uniform family, kept sorted by the numeric value of the
// member bit vectors so that every "smallest such set" rule is reproducible.
// Immutable after construction.
class SetFamily {
 public:
  SetFamily(Params p, std::vector<Mask> sets);

  static SetFamily empty(Params p) { return SetFamily(p, {}); }

  const Params& params() const { return params_; }
  std::span<const Mask> masks() const { return masks_; }
  std::size_t size() const { return masks_.size(); }
  bool contains(Mask m) const;
  KSet at(std::size_t i) const { return KSet(masks_[i]); }

  bool operator==(const SetFamily&) const = default;

  // Text format: first line "n k s", then one set per line as ascending
  // space-separated elements. Errors name the offending 1-based line.
  static SetFamily read_text(std::istream& in);
  void write_text(std::ostream& out) const;

 private:
  Params params_;
  std::vector<Mask> masks_;
};

struct CompactionResult {
  SetFamily family;                   // relabeled onto [new_n]
  std::vector<Element> removed;       // the uncovered elements, ascending
  unsigned new_n = 0;
  std::vector<std::pair<Element, Element>> relabel_map;  // old -> new, surviving only
  bool s_changed = false;             // relabeling had to touch S
  unsigned s_slots_unfilled = 0;      // slots of {1..s-1} left empty (new_n < s-1)
};

// max{ C(sk-1,k), C(n,k) - C(n-s+1,k) }; requires n >= s*k.
std::uint64_t emc_bound(const Params& p);

// All k-subsets of [n] meeting S = {1..s-1}; requires n >= s*k.
SetFamily make_f_star(const Params& p);

// All k-subsets of {1..sk-1}; requires sk-1 <= n.
SetFamily make_g_star(const Params& p);

// Elements of [n] contained in no member; empty iff the family is non-trivial.
std::vector<Element> uncovered_elements(const SetFamily& f);
bool is_trivial(const SetFamily& f);

// Drops uncovered elements and relabels the rest onto [new_n]. Surviving
// members of S are assigned first to slots {1..s-1} in ascending order;
// remaining S slots are filled by the smallest surviving non-S elements;
// everything else follows order-preservingly.
CompactionResult compact_ground(const SetFamily& f);

// Phi(f) = number of members meeting S.
std::uint64_t potential(const SetFamily& f);

// F^x: the members containing x (1 <= x <= n).
SetFamily subfamily_containing(const SetFamily& f, Element x);
std::uint64_t count_containing(const SetFamily& f, Element x);

}  // namespace emc
