#pragma once

#include <cstdint>

namespace emc {

// Exact binomial coefficient C(a, b); 0 when b > a.
// Throws std::overflow_error if the value does not fit in 64 bits --
// never wraps silently.
std::uint64_t binomial(std::uint64_t a, std::uint64_t b);

}  // namespace emc
