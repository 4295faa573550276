#include "emc/binomial.hpp"

#include <limits>
#include <stdexcept>

namespace emc {

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  // r * (a-b+i) is always divisible by i, so every intermediate value is the
  // exact binomial C(a-b+i, i). These are nondecreasing in i, so checking the
  // 64-bit range at each step is enough to reject any overflowing result.
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    r = r * (a - b + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace emc
