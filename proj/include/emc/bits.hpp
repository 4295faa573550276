#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace emc {

// Ground-set elements are 1-based; element e lives at bit (e-1) of a Mask.
using Mask = std::uint64_t;
using Element = unsigned;

inline constexpr unsigned kMaxGround = 64;

constexpr Mask bit_of(Element e) { return Mask{1} << (e - 1); }

constexpr bool mask_contains(Mask m, Element e) { return (m & bit_of(e)) != 0; }

// Bits 1..n set; 0 for n == 0.
constexpr Mask full_mask(unsigned n) {
  return n == 0 ? Mask{0} : (~Mask{0} >> (kMaxGround - n));
}

std::vector<Element> elements_of(Mask m);

// Elements must be in 1..64 and pairwise distinct.
Mask mask_of(std::span<const Element> elems);
Mask mask_of(std::initializer_list<Element> elems);

// k-subsets of [n] in ascending numeric (mask) order, via Gosper's hack.
std::optional<Mask> first_ksubset(unsigned n, unsigned k);
std::optional<Mask> next_ksubset(Mask m, unsigned n);

// Calls fn(mask) for every k-subset of [n]; fn returns false to stop early.
template <class Fn>
void for_each_ksubset(unsigned n, unsigned k, Fn&& fn) {
  for (auto m = first_ksubset(n, k); m; m = next_ksubset(*m, n)) {
    if (!fn(*m)) return;
  }
}

}  // namespace emc
