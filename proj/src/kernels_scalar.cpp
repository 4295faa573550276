#include "emc/kernels.hpp"

namespace emc::kern {
namespace {

std::size_t sc_count_intersecting(const std::uint64_t* v, std::size_t n, std::uint64_t m) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += (v[i] & m) != 0;
  return c;
}

std::uint64_t sc_or_reduce(const std::uint64_t* v, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc |= v[i];
  return acc;
}

std::size_t sc_filter_disjoint(const std::uint64_t* v, std::size_t n, std::uint64_t m,
                               std::uint32_t* out) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((v[i] & m) == 0) out[c++] = static_cast<std::uint32_t>(i);
  }
  return c;
}

std::size_t sc_filter_disjoint_indexed(const std::uint64_t* v, const std::uint32_t* idx,
                                       std::size_t n, std::uint64_t m, std::uint32_t* out) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((v[idx[i]] & m) == 0) out[c++] = idx[i];
  }
  return c;
}

constexpr Ops kScalar = {
    "scalar", &sc_count_intersecting, &sc_or_reduce, &sc_filter_disjoint,
    &sc_filter_disjoint_indexed,
};

}  // namespace

const Ops& scalar_ops() { return kScalar; }

}  // namespace emc::kern
