// AVX2 variants of the bitset-scan kernels. This translation unit is compiled
// with -mavx2 on x86; the dispatcher only hands out the table after a runtime
// CPU check, so the rest of the binary stays baseline.

#include "emc/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define EMC_HAVE_AVX2_TU 1
#include <immintrin.h>

#include <bit>
#endif

namespace emc::kern {

#if EMC_HAVE_AVX2_TU
namespace {

inline unsigned zero_lane_bits(__m256i x) {
  // 4-bit mask, bit set where the 64-bit lane is all-zero.
  const __m256i eq = _mm256_cmpeq_epi64(x, _mm256_setzero_si256());
  return static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(eq)));
}

std::size_t ax_count_intersecting(const std::uint64_t* v, std::size_t n, std::uint64_t m) {
  const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(m));
  std::size_t c = 0, i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    c += 4u - std::popcount(zero_lane_bits(_mm256_and_si256(x, vm)));
  }
  for (; i < n; ++i) c += (v[i] & m) != 0;
  return c;
}

std::uint64_t ax_or_reduce(const std::uint64_t* v, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i)));
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t r = lanes[0] | lanes[1] | lanes[2] | lanes[3];
  for (; i < n; ++i) r |= v[i];
  return r;
}

std::size_t ax_filter_disjoint(const std::uint64_t* v, std::size_t n, std::uint64_t m,
                               std::uint32_t* out) {
  const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(m));
  std::size_t c = 0, i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    unsigned z = zero_lane_bits(_mm256_and_si256(x, vm));
    while (z != 0) {
      const unsigned lane = static_cast<unsigned>(std::countr_zero(z));
      out[c++] = static_cast<std::uint32_t>(i + lane);
      z &= z - 1;
    }
  }
  for (; i < n; ++i) {
    if ((v[i] & m) == 0) out[c++] = static_cast<std::uint32_t>(i);
  }
  return c;
}

std::size_t ax_filter_disjoint_indexed(const std::uint64_t* v, const std::uint32_t* idx,
                                       std::size_t n, std::uint64_t m, std::uint32_t* out) {
  const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(m));
  std::size_t c = 0, i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + i));
    const __m256i x = _mm256_i32gather_epi64(reinterpret_cast<const long long*>(v), vi, 8);
    unsigned z = zero_lane_bits(_mm256_and_si256(x, vm));
    while (z != 0) {
      const unsigned lane = static_cast<unsigned>(std::countr_zero(z));
      out[c++] = idx[i + lane];
      z &= z - 1;
    }
  }
  for (; i < n; ++i) {
    if ((v[idx[i]] & m) == 0) out[c++] = idx[i];
  }
  return c;
}

constexpr Ops kAvx2 = {
    "avx2", &ax_count_intersecting, &ax_or_reduce, &ax_filter_disjoint,
    &ax_filter_disjoint_indexed,
};

}  // namespace

const Ops* avx2_table_if_supported() {
  return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
}
#else
const Ops* avx2_table_if_supported() { return nullptr; }
#endif

}  // namespace emc::kern
