#include "emc/bits.hpp"

#include <stdexcept>

namespace emc {

std::vector<Element> elements_of(Mask m) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m != 0) {
    const unsigned b = static_cast<unsigned>(std::countr_zero(m));
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

Mask mask_of(std::span<const Element> elems) {
  Mask m = 0;
  for (Element e : elems) {
    if (e < 1 || e > kMaxGround) throw std::invalid_argument("element out of range 1..64");
    if (mask_contains(m, e)) throw std::invalid_argument("duplicate element in set");
    m |= bit_of(e);
  }
  return m;
}

Mask mask_of(std::initializer_list<Element> elems) {
  return mask_of(std::span<const Element>(elems.begin(), elems.size()));
}

std::optional<Mask> first_ksubset(unsigned n, unsigned k) {
  if (k > n) return std::nullopt;
  if (k == 0) return Mask{0};
  return full_mask(k);
}

std::optional<Mask> next_ksubset(Mask m, unsigned n) {
  if (m == 0) return std::nullopt;  // the empty subset is alone in its rank
  const Mask u = m & (~m + 1);
  Mask v;
  if (__builtin_add_overflow(m, u, &v)) return std::nullopt;
  const Mask w = v | (((m ^ v) >> 2) / u);
  if (n < kMaxGround && (w & ~full_mask(n)) != 0) return std::nullopt;
  return w;
}

}  // namespace emc
