#include <immintrin.h>

#include <cmath>

#include "mjmcmc/simd/kernels.hpp"

namespace mjmcmc::simd {

namespace {

std::size_t flip_mask_avx2(const double* u, const double* rates, double eps, std::uint8_t* out,
                           std::size_t k) {
  const __m256d veps = _mm256_set1_pd(eps);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= k; i += 4) {
    const __m256d p = _mm256_mul_pd(_mm256_loadu_pd(rates + i), veps);
    const __m256d lt = _mm256_cmp_pd(_mm256_loadu_pd(u + i), p, _CMP_LT_OQ);
    const int mask = _mm256_movemask_pd(lt);
    out[i + 0] = mask & 1;
    out[i + 1] = (mask >> 1) & 1;
    out[i + 2] = (mask >> 2) & 1;
    out[i + 3] = (mask >> 3) & 1;
    count += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  for (; i < k; ++i) {
    const bool f = u[i] < rates[i] * eps;
    out[i] = f;
    count += f;
  }
  return count;
}

void accumulate_bits_avx2(double* acc, const std::uint8_t* bits, double weight, std::size_t k) {
  const __m256d w = _mm256_set1_pd(weight);
  std::size_t i = 0;
  for (; i + 4 <= k; i += 4) {
    std::uint32_t packed;
    __builtin_memcpy(&packed, bits + i, 4);
    const __m128i b32 = _mm_cvtepu8_epi32(_mm_cvtsi32_si128(static_cast<int>(packed)));
    const __m256d b = _mm256_cvtepi32_pd(b32);
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), _mm256_mul_pd(w, b)));
  }
  for (; i < k; ++i) acc[i] += weight * static_cast<double>(bits[i]);
}

void scale_avx2(const double* src, double factor, double* dst, std::size_t n) {
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(src + i), f));
  for (; i < n; ++i) dst[i] = src[i] * factor;
}

void vec_mat_avx2(const double* x, const double* m, double* y, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) y[j] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const __m256d vx = _mm256_set1_pd(xi);
    const double* row = m + i * n;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      const __m256d prod = _mm256_mul_pd(vx, _mm256_loadu_pd(row + j));
      _mm256_storeu_pd(y + j, _mm256_add_pd(_mm256_loadu_pd(y + j), prod));
    }
    for (; j < n; ++j) y[j] += xi * row[j];
  }
}

double l1_distance_avx2(const double* a, const double* b, std::size_t n) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d s0 = _mm256_setzero_pd();
  __m256d s1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4));
    s0 = _mm256_add_pd(s0, _mm256_andnot_pd(sign, d0));
    s1 = _mm256_add_pd(s1, _mm256_andnot_pd(sign, d1));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(s0, s1));
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += std::fabs(a[i] - b[i]);
  return s;
}

constexpr KernelTable kAvx2{Isa::Avx2,  flip_mask_avx2, accumulate_bits_avx2,
                            scale_avx2, vec_mat_avx2,   l1_distance_avx2};

}  // namespace

const KernelTable* avx2_kernel_table() noexcept { return &kAvx2; }

}  // namespace mjmcmc::simd
