#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace emc::kern {

// Bitset-scan kernels behind the family/matching hot loops. One scalar
// reference table plus an AVX2 table on x86; the backend is picked once at
// runtime (EMC_KERNELS=scalar|avx2 forces a choice). Both tables must agree
// bit-for-bit; tests/test_kernels.cpp holds the equivalence suite.
struct Ops {
  const char* name;
  // |{ i : v[i] & m != 0 }|
  std::size_t (*count_intersecting)(const std::uint64_t* v, std::size_t n, std::uint64_t m);
  // OR of all v[i] (0 for empty input)
  std::uint64_t (*or_reduce)(const std::uint64_t* v, std::size_t n);
  // Writes indices i with v[i] & m == 0 to out (ascending); returns count.
  std::size_t (*filter_disjoint)(const std::uint64_t* v, std::size_t n, std::uint64_t m,
                                 std::uint32_t* out);
  // Same over a gather list: scans v[idx[0..n)], writes surviving idx values.
  std::size_t (*filter_disjoint_indexed)(const std::uint64_t* v, const std::uint32_t* idx,
                                         std::size_t n, std::uint64_t m, std::uint32_t* out);
};

const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when this build/CPU has no AVX2
const Ops& active();

inline std::size_t count_intersecting(std::span<const std::uint64_t> v, std::uint64_t m) {
  return active().count_intersecting(v.data(), v.size(), m);
}
inline std::size_t count_disjoint(std::span<const std::uint64_t> v, std::uint64_t m) {
  return v.size() - count_intersecting(v, m);
}
inline std::uint64_t or_reduce(std::span<const std::uint64_t> v) {
  return active().or_reduce(v.data(), v.size());
}
inline std::size_t filter_disjoint(std::span<const std::uint64_t> v, std::uint64_t m,
                                   std::uint32_t* out) {
  return active().filter_disjoint(v.data(), v.size(), m, out);
}
inline std::size_t filter_disjoint_indexed(const std::uint64_t* v,
                                           std::span<const std::uint32_t> idx, std::uint64_t m,
                                           std::uint32_t* out) {
  return active().filter_disjoint_indexed(v, idx.data(), idx.size(), m, out);
}

}  // namespace emc::kern
