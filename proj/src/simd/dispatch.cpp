#include <cstdlib>
#include <cstring>

#include "mjmcmc/simd/kernels.hpp"

namespace mjmcmc::simd {

#ifdef MJMCMC_HAVE_AVX2
const KernelTable* avx2_kernel_table() noexcept;
#endif

const char* isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable* avx2_kernels() noexcept {
#ifdef MJMCMC_HAVE_AVX2
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return avx2_kernel_table();
#endif
  return nullptr;
}

const KernelTable& active_kernels() noexcept {
  static const KernelTable* selected = [] {
    const char* forced = std::getenv("MJMCMC_SIMD");
    if (forced && std::strcmp(forced, "scalar") == 0) return &scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return t;
    return &scalar_kernels();
  }();
  return *selected;
}

}  // namespace mjmcmc::simd
