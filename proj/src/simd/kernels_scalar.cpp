#include <cmath>

#include "mjmcmc/simd/kernels.hpp"

namespace mjmcmc::simd {

namespace {

std::size_t flip_mask_scalar(const double* u, const double* rates, double eps, std::uint8_t* out,
                             std::size_t k) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const bool f = u[i] < rates[i] * eps;
    out[i] = f;
    count += f;
  }
  return count;
}

void accumulate_bits_scalar(double* acc, const std::uint8_t* bits, double weight, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) acc[i] += weight * static_cast<double>(bits[i]);
}

void scale_scalar(const double* src, double factor, double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = src[i] * factor;
}

void vec_mat_scalar(const double* x, const double* m, double* y, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) y[j] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double* row = m + i * n;
    for (std::size_t j = 0; j < n; ++j) y[j] += xi * row[j];
  }
}

double l1_distance_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::fabs(a[i] - b[i]);
  return s;
}

constexpr KernelTable kScalar{Isa::Scalar,   flip_mask_scalar, accumulate_bits_scalar,
                              scale_scalar,  vec_mat_scalar,   l1_distance_scalar};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

}  // namespace mjmcmc::simd
