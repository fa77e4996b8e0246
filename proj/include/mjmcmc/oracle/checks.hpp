#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mjmcmc/oracle/dense.hpp"
#include "mjmcmc/schedule.hpp"

namespace mjmcmc::oracle {

struct BiasSlope {
  /// TV below 1e-10 at every epsilon: the kernel is exact and no slope is fitted.
  bool exact = false;
  double slope = 0.0;
  std::vector<double> epsilons;
  std::vector<double> tv;
};

/// Fitted log-log slope of TV(pi_eps, pi) against eps.
BiasSlope bias_slope(const PosteriorModel& model, std::size_t k, const std::vector<double>& epsilons);

struct BalanceCheck {
  bool pass = false;
  double max_violation = 0.0;
};

/// max over pairs of |pi(m) P(m,m') - pi(m') P(m',m)|, pass iff <= tol.
BalanceCheck check_detailed_balance(const DenseKernel& kernel, const DistributionVector& pi,
                                    double tol);

struct WaitingTimeRow {
  double epsilon = 0.0;
  /// Exact E[eps * W] = eps / (1 - r_eps(m)).
  double mean_scaled_wait = 0.0;
  /// 1 / lambda(m).
  double target = 0.0;
  /// sup over the grid of |P(eps W <= u) - (1 - exp(-lambda u))|, u in [0, 5/lambda].
  double cdf_sup_error = 0.0;
};

std::vector<WaitingTimeRow> waiting_time_check(const RateVector& rates,
                                               const std::vector<double>& epsilons,
                                               std::size_t grid_points = 1001);
std::vector<WaitingTimeRow> waiting_time_check(const PosteriorModel& model, const BinaryModel& m,
                                               const std::vector<double>& epsilons,
                                               std::size_t grid_points = 1001);

struct JumpRow {
  double epsilon = 0.0;
  /// P_eps(m, m^i) / (1 - r_eps(m)) for each i.
  std::vector<double> neighbour;
  /// q_i / lambda.
  std::vector<double> target;
  double max_neighbour_error = 0.0;
  /// Largest conditional jump probability to a single non-neighbour.
  double non_neighbour_max = 0.0;
  /// Total conditional jump probability to all non-neighbours.
  double non_neighbour_total = 0.0;
};

/// Needs k <= kMaxK (non-neighbour states are enumerated).
std::vector<JumpRow> jump_probability_check(const RateVector& rates,
                                            const std::vector<double>& epsilons);
std::vector<JumpRow> jump_probability_check(const PosteriorModel& model, const BinaryModel& m,
                                            const std::vector<double>& epsilons);

struct ConvergenceTrace {
  /// TV(mu_s, pi) for s = 0..S (index 0 is the initial distribution).
  std::vector<double> tv;
  double final_tv() const { return tv.back(); }
};

/// Exact propagation mu_{s} = mu_{s-1} P_{eps_s}. Starts from the point mass
/// at the empty model unless `initial` is given.
ConvergenceTrace inhomogeneous_convergence_check(const PosteriorModel& model, std::size_t k,
                                                 const EpsilonSchedule& schedule, std::size_t steps,
                                                 std::optional<DistributionVector> initial = {});

struct ResidualSlope {
  std::vector<double> epsilons;
  /// ||P_eps - I - eps Q||_max.
  std::vector<double> residual;
  double slope = 0.0;
};

ResidualSlope kernel_rate_residual(const PosteriorModel& model, std::size_t k,
                                   const std::vector<double>& epsilons);

}  // namespace mjmcmc::oracle
