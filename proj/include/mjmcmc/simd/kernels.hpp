#pragma once

#include <cstddef>
#include <cstdint>

namespace mjmcmc::simd {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa) noexcept;

/// Inner loops shared by the samplers and the exact oracle. Every variant must
/// agree with the scalar reference: element-wise kernels bit for bit,
/// reductions to rounding.
struct KernelTable {
  Isa isa;

  /// out[i] = (u[i] < rates[i] * eps); returns the number of set entries.
  std::size_t (*flip_mask)(const double* u, const double* rates, double eps, std::uint8_t* out,
                           std::size_t k);

  /// acc[i] += weight * bits[i] for 0/1 bits.
  void (*accumulate_bits)(double* acc, const std::uint8_t* bits, double weight, std::size_t k);

  /// dst[i] = src[i] * factor (src and dst may alias).
  void (*scale)(const double* src, double factor, double* dst, std::size_t n);

  /// y = x * M for a row-major n x n matrix M (y must not alias x or M).
  void (*vec_mat)(const double* x, const double* m, double* y, std::size_t n);

  /// sum_i |a[i] - b[i]|.
  double (*l1_distance)(const double* a, const double* b, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

/// Best table for this CPU. MJMCMC_SIMD=scalar forces the reference kernels.
const KernelTable& active_kernels() noexcept;

}  // namespace mjmcmc::simd
