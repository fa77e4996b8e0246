#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mjmcmc/posterior_model.hpp"
#include "mjmcmc/rates.hpp"

namespace mjmcmc::oracle {

/// Largest k the dense oracle accepts (2^12 x 2^12 kernels).
inline constexpr std::size_t kMaxK = 12;

enum class KernelKind { MultipleJump, BirthDeathRates, MhCorrected };

/// Dense 2^k x 2^k matrix over bit-packed states (bit i of the index = m_i).
struct DenseKernel {
  std::size_t k = 0;
  std::size_t n = 0;
  KernelKind kind = KernelKind::MultipleJump;
  double epsilon = 0.0;
  std::vector<double> entries;  // row-major

  double operator()(std::size_t from, std::size_t to) const { return entries[from * n + to]; }
  double& at(std::size_t from, std::size_t to) { return entries[from * n + to]; }
  std::span<const double> row(std::size_t from) const { return {entries.data() + from * n, n}; }
};

/// Probabilities over the 2^k packed states.
using DistributionVector = std::vector<double>;

/// q_i(m) for every state: rates[state * k + i].
struct RateTable {
  std::size_t k = 0;
  std::size_t n = 0;
  std::vector<double> rates;

  std::span<const double> at(std::size_t state) const { return {rates.data() + state * k, k}; }
};

/// Throws CapacityError unless 1 <= k <= kMaxK and k matches the model.
void check_capacity(const PosteriorModel& model, std::size_t k);

RateTable rate_table(const PosteriorModel& model, std::size_t k);

/// Unnormalised log pi over all states, accumulated from single-flip log
/// ratios along the path that clears bits from the lowest one upward.
std::vector<double> log_potential(const PosteriorModel& model, std::size_t k);

/// Row of the multiple-jump kernel for rates q at `state`:
/// P(m, m') = prod_{i in H} q_i eps * prod_{i not in H} (1 - q_i eps).
void mj_kernel_row(std::span<const double> q, double eps, std::size_t state, std::span<double> row,
                   std::span<double> scratch);

DenseKernel build_mj_kernel(const PosteriorModel& model, std::size_t k, double eps);
DenseKernel build_mj_kernel(const RateTable& table, double eps);

/// Birth-death generator Q: Q(m, m^i) = q_i(m), Q(m, m) = -lambda(m).
DenseKernel build_bd_rate_matrix(const PosteriorModel& model, std::size_t k);
DenseKernel build_bd_rate_matrix(const RateTable& table);

/// Multiple-jump proposal with Metropolis-Hastings acceptance.
DenseKernel build_mh_kernel(const PosteriorModel& model, std::size_t k, double eps);

struct StationaryOptions {
  double tolerance = 1e-12;
  std::size_t max_sweeps = 1'000'000;
};

/// Unique left fixed point. Stochastic kernels use power iteration until
/// ||mu P - mu||_1 < tolerance, falling back to a dense linear solve when the
/// sweep budget runs out; rate matrices are solved directly (pi Q = 0).
DistributionVector stationary_distribution(const DenseKernel& kernel,
                                           const StationaryOptions& options = {});

/// pi of the birth-death process, from the null left vector of its rate matrix.
DistributionVector bd_stationary(const PosteriorModel& model, std::size_t k);

/// Half the L1 distance.
double tv_distance(std::span<const double> a, std::span<const double> b);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace mjmcmc::oracle
