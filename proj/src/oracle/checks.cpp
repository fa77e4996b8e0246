#include "mjmcmc/oracle/checks.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "mjmcmc/error.hpp"
#include "mjmcmc/simd/kernels.hpp"

namespace mjmcmc::oracle {
namespace {

// log r_eps(m) = sum_i log(1 - q_i eps), the log probability of not moving.
double log_stay(std::span<const double> q, double eps) {
  double s = 0.0;
  for (double qi : q) s += std::log1p(-qi * eps);
  return s;
}

}  // namespace

BiasSlope bias_slope(const PosteriorModel& model, std::size_t k, const std::vector<double>& epsilons) {
  const RateTable table = rate_table(model, k);
  const DistributionVector pi = stationary_distribution(build_bd_rate_matrix(table));
  BiasSlope out;
  out.epsilons = epsilons;
  out.exact = true;
  for (double eps : epsilons) {
    const DistributionVector pe = stationary_distribution(build_mj_kernel(table, eps));
    const double tv = tv_distance(pe, pi);
    out.tv.push_back(tv);
    if (tv >= 1e-10) out.exact = false;
  }
  if (!out.exact) out.slope = loglog_slope(out.epsilons, out.tv);
  return out;
}

BalanceCheck check_detailed_balance(const DenseKernel& kernel, const DistributionVector& pi,
                                    double tol) {
  if (pi.size() != kernel.n) throw Error("check_detailed_balance: length mismatch");
  BalanceCheck out;
  for (std::size_t a = 0; a < kernel.n; ++a) {
    for (std::size_t b = a + 1; b < kernel.n; ++b) {
      const double v = std::abs(pi[a] * kernel(a, b) - pi[b] * kernel(b, a));
      out.max_violation = std::max(out.max_violation, v);
    }
  }
  out.pass = out.max_violation <= tol;
  return out;
}

std::vector<WaitingTimeRow> waiting_time_check(const RateVector& rates,
                                               const std::vector<double>& epsilons,
                                               std::size_t grid_points) {
  const double lambda = rates.total();
  if (!(lambda > 0.0)) throw NumericalError("waiting_time_check: zero exit rate");
  const double horizon = 5.0 / lambda;
  std::vector<WaitingTimeRow> rows;
  for (double eps : epsilons) {
    const double lr = log_stay(rates.rates, eps);
    const double move = -std::expm1(lr);  // 1 - r
    WaitingTimeRow row;
    row.epsilon = eps;
    row.mean_scaled_wait = eps / move;
    row.target = 1.0 / lambda;
    // P(eps W <= u) = 1 - r^floor(u / eps), a right-continuous step function.
    const auto cdf_at_steps = [&](double steps) { return -std::expm1(steps * lr); };
    const auto exp_cdf = [&](double u) { return -std::expm1(-lambda * u); };
    double sup = 0.0;
    for (std::size_t g = 0; g < grid_points; ++g) {
      const double u = horizon * static_cast<double>(g) / static_cast<double>(grid_points - 1);
      sup = std::max(sup, std::abs(cdf_at_steps(std::floor(u / eps)) - exp_cdf(u)));
    }
    // Left limits at the jump points, where the step function is furthest below.
    const auto jumps = static_cast<std::size_t>(std::floor(horizon / eps));
    for (std::size_t j = 1; j <= jumps; ++j) {
      const double u = static_cast<double>(j) * eps;
      sup = std::max(sup, std::abs(cdf_at_steps(static_cast<double>(j - 1)) - exp_cdf(u)));
      sup = std::max(sup, std::abs(cdf_at_steps(static_cast<double>(j)) - exp_cdf(u)));
    }
    row.cdf_sup_error = sup;
    rows.push_back(row);
  }
  return rows;
}

std::vector<WaitingTimeRow> waiting_time_check(const PosteriorModel& model, const BinaryModel& m,
                                               const std::vector<double>& epsilons,
                                               std::size_t grid_points) {
  return waiting_time_check(compute_rates(model, m), epsilons, grid_points);
}

std::vector<JumpRow> jump_probability_check(const RateVector& rates,
                                            const std::vector<double>& epsilons) {
  const std::size_t k = rates.size();
  if (k == 0 || k > kMaxK) throw CapacityError("jump_probability_check supports 1 <= k <= 12");
  const std::size_t n = std::size_t{1} << k;
  const double lambda = rates.total();
  std::vector<double> row(n), scratch(n);
  std::vector<JumpRow> out;
  for (double eps : epsilons) {
    // Row of the state 0 is the flip-set distribution itself.
    mj_kernel_row(rates.rates, eps, 0, row, scratch);
    const double move = -std::expm1(log_stay(rates.rates, eps));
    JumpRow jr;
    jr.epsilon = eps;
    for (std::size_t i = 0; i < k; ++i) {
      jr.neighbour.push_back(row[std::size_t{1} << i] / move);
      jr.target.push_back(rates.rates[i] / lambda);
      jr.max_neighbour_error =
          std::max(jr.max_neighbour_error, std::abs(jr.neighbour.back() - jr.target.back()));
    }
    for (std::size_t h = 0; h < n; ++h) {
      if (std::popcount(h) < 2) continue;
      const double v = row[h] / move;
      jr.non_neighbour_total += v;
      jr.non_neighbour_max = std::max(jr.non_neighbour_max, v);
    }
    out.push_back(std::move(jr));
  }
  return out;
}

std::vector<JumpRow> jump_probability_check(const PosteriorModel& model, const BinaryModel& m,
                                            const std::vector<double>& epsilons) {
  return jump_probability_check(compute_rates(model, m), epsilons);
}

ConvergenceTrace inhomogeneous_convergence_check(const PosteriorModel& model, std::size_t k,
                                                 const EpsilonSchedule& schedule, std::size_t steps,
                                                 std::optional<DistributionVector> initial) {
  const RateTable table = rate_table(model, k);
  const DistributionVector pi = stationary_distribution(build_bd_rate_matrix(table));
  const std::size_t n = table.n;
  DistributionVector mu;
  if (initial) {
    if (initial->size() != n) throw Error("initial distribution has the wrong length");
    mu = *initial;
  } else {
    mu.assign(n, 0.0);
    mu[0] = 1.0;
  }
  const auto& kt = simd::active_kernels();
  DenseKernel p;
  p.k = k;
  p.n = n;
  p.entries.assign(n * n, 0.0);
  std::vector<double> scratch(n), next(n);
  ConvergenceTrace trace;
  trace.tv.reserve(steps + 1);
  trace.tv.push_back(tv_distance(mu, pi));
  for (std::size_t s = 1; s <= steps; ++s) {
    const double eps = schedule.at(s);
    for (std::size_t st = 0; st < n; ++st) {
      mj_kernel_row(table.at(st), eps, st, {p.entries.data() + st * n, n}, scratch);
    }
    kt.vec_mat(mu.data(), p.entries.data(), next.data(), n);
    mu.swap(next);
    trace.tv.push_back(tv_distance(mu, pi));
  }
  return trace;
}

ResidualSlope kernel_rate_residual(const PosteriorModel& model, std::size_t k,
                                   const std::vector<double>& epsilons) {
  const RateTable table = rate_table(model, k);
  const DenseKernel q = build_bd_rate_matrix(table);
  ResidualSlope out;
  out.epsilons = epsilons;
  for (double eps : epsilons) {
    const DenseKernel p = build_mj_kernel(table, eps);
    double worst = 0.0;
    for (std::size_t a = 0; a < p.n; ++a) {
      for (std::size_t b = 0; b < p.n; ++b) {
        const double v = p(a, b) - (a == b ? 1.0 : 0.0) - eps * q(a, b);
        worst = std::max(worst, std::abs(v));
      }
    }
    out.residual.push_back(worst);
  }
  out.slope = loglog_slope(out.epsilons, out.residual);
  return out;
}

}  // namespace mjmcmc::oracle
