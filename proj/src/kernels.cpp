#include "emc/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace emc::kern {

const Ops* avx2_table_if_supported();  // defined in kernels_avx2.cpp

const Ops* avx2_ops() { return avx2_table_if_supported(); }

namespace {

const Ops& select() {
  if (const char* env = std::getenv("EMC_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return scalar_ops();
    if (std::strcmp(env, "avx2") == 0) {
      if (const Ops* t = avx2_ops()) return *t;
      throw std::runtime_error("EMC_KERNELS=avx2 but AVX2 is unavailable");
    }
    throw std::runtime_error("EMC_KERNELS must be 'scalar' or 'avx2'");
  }
  if (const Ops* t = avx2_ops()) return *t;
  return scalar_ops();
}

}  // namespace

const Ops& active() {
  static const Ops& chosen = select();
  return chosen;
}

}  // namespace emc::kern
