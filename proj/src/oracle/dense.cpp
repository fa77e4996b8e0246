#include "mjmcmc/oracle/dense.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "mjmcmc/error.hpp"
#include "mjmcmc/simd/kernels.hpp"

namespace mjmcmc::oracle {
namespace {

// Power iteration gives up (and hands over to the direct solve) after roughly
// this many multiply-adds.
constexpr double kPowerIterationBudget = 4e9;

DistributionVector solve_left_null(const Eigen::MatrixXd& generator_t) {
  // Rows of generator_t are the equations (A^T pi = 0); swap the last one for sum(pi) = 1.
  const Eigen::Index n = generator_t.rows();
  Eigen::MatrixXd a = generator_t;
  a.row(n - 1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  b(n - 1) = 1.0;
  Eigen::VectorXd x = a.fullPivLu().solve(b);
  if (!x.allFinite()) throw NumericalError("stationary solve produced non-finite values");
  DistributionVector pi(x.data(), x.data() + n);
  for (double& v : pi) v = std::max(v, 0.0);
  const double total = std::accumulate(pi.begin(), pi.end(), 0.0);
  if (!(total > 0.0)) throw NumericalError("stationary solve produced no mass");
  for (double& v : pi) v /= total;
  return pi;
}

}  // namespace

void check_capacity(const PosteriorModel& model, std::size_t k) {
  if (k == 0 || k > kMaxK) {
    throw CapacityError("dense oracle supports 1 <= k <= " + std::to_string(kMaxK) + ", got " +
                        std::to_string(k));
  }
  if (model.size() != k) {
    throw CapacityError("model has " + std::to_string(model.size()) + " elements, oracle asked for " +
                        std::to_string(k));
  }
}

RateTable rate_table(const PosteriorModel& model, std::size_t k) {
  check_capacity(model, k);
  RateTable t;
  t.k = k;
  t.n = std::size_t{1} << k;
  t.rates.resize(t.n * k);
  for (std::size_t s = 0; s < t.n; ++s) {
    RateVector rv = compute_rates(model, BinaryModel::from_index(s, k));
    std::copy(rv.rates.begin(), rv.rates.end(), t.rates.begin() + s * k);
  }
  return t;
}

std::vector<double> log_potential(const PosteriorModel& model, std::size_t k) {
  check_capacity(model, k);
  const std::size_t n = std::size_t{1} << k;
  std::vector<double> lp(n, 0.0);
  for (std::size_t s = 1; s < n; ++s) {
    const std::size_t parent = s & (s - 1);
    const auto bit = static_cast<std::size_t>(std::countr_zero(s));
    const double lr = model.log_ratio(BinaryModel::from_index(parent, k), bit);
    if (!std::isfinite(lr)) throw ModelEvaluationError(bit, "non-finite log ratio");
    lp[s] = lp[parent] + lr;
  }
  return lp;
}

void mj_kernel_row(std::span<const double> q, double eps, std::size_t state, std::span<double> row,
                   std::span<double> scratch) {
  const auto& kt = simd::active_kernels();
  const std::size_t k = q.size();
  const std::size_t n = std::size_t{1} << k;
  // scratch[H] = P(flip set == H), built one element at a time.
  scratch[0] = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t half = std::size_t{1} << i;
    const double p = q[i] * eps;
    kt.scale(scratch.data(), p, scratch.data() + half, half);
    kt.scale(scratch.data(), 1.0 - p, scratch.data(), half);
  }
  for (std::size_t h = 0; h < n; ++h) row[state ^ h] = scratch[h];
}

DenseKernel build_mj_kernel(const RateTable& table, double eps) {
  DenseKernel p;
  p.k = table.k;
  p.n = table.n;
  p.kind = KernelKind::MultipleJump;
  p.epsilon = eps;
  p.entries.assign(p.n * p.n, 0.0);
  std::vector<double> scratch(p.n);
  for (std::size_t s = 0; s < p.n; ++s) {
    mj_kernel_row(table.at(s), eps, s, {p.entries.data() + s * p.n, p.n}, scratch);
  }
  return p;
}

DenseKernel build_mj_kernel(const PosteriorModel& model, std::size_t k, double eps) {
  return build_mj_kernel(rate_table(model, k), eps);
}

DenseKernel build_bd_rate_matrix(const RateTable& table) {
  DenseKernel q;
  q.k = table.k;
  q.n = table.n;
  q.kind = KernelKind::BirthDeathRates;
  q.entries.assign(q.n * q.n, 0.0);
  for (std::size_t s = 0; s < q.n; ++s) {
    const auto r = table.at(s);
    double lambda = 0.0;
    for (std::size_t i = 0; i < q.k; ++i) {
      q.at(s, s ^ (std::size_t{1} << i)) = r[i];
      lambda += r[i];
    }
    q.at(s, s) = -lambda;
  }
  return q;
}

DenseKernel build_bd_rate_matrix(const PosteriorModel& model, std::size_t k) {
  return build_bd_rate_matrix(rate_table(model, k));
}

DenseKernel build_mh_kernel(const PosteriorModel& model, std::size_t k, double eps) {
  const DenseKernel prop = build_mj_kernel(model, k, eps);
  const std::vector<double> lp = log_potential(model, k);
  DenseKernel p = prop;
  p.kind = KernelKind::MhCorrected;
  for (std::size_t a = 0; a < p.n; ++a) {
    double off = 0.0;
    for (std::size_t b = 0; b < p.n; ++b) {
      if (a == b) continue;
      const double forward = prop(a, b);
      const double reverse = std::exp(lp[b] - lp[a]) * prop(b, a);
      const double v = std::min(forward, reverse);
      p.at(a, b) = v;
      off += v;
    }
    p.at(a, a) = std::max(0.0, 1.0 - off);
  }
  return p;
}

DistributionVector stationary_distribution(const DenseKernel& kernel,
                                           const StationaryOptions& options) {
  const std::size_t n = kernel.n;
  if (n == 0 || kernel.entries.size() != n * n) throw NumericalError("malformed kernel");
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      kernel.entries.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));

  if (kernel.kind == KernelKind::BirthDeathRates) return solve_left_null(m.transpose());

  const auto& kt = simd::active_kernels();
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  const auto sweeps = static_cast<std::size_t>(
      std::min(static_cast<double>(options.max_sweeps), std::max(1.0, kPowerIterationBudget / nn)));
  DistributionVector mu(n, 1.0 / static_cast<double>(n));
  DistributionVector next(n);
  for (std::size_t it = 0; it < sweeps; ++it) {
    kt.vec_mat(mu.data(), kernel.entries.data(), next.data(), n);
    const double total = std::accumulate(next.begin(), next.end(), 0.0);
    for (double& v : next) v /= total;
    const double residual = kt.l1_distance(mu.data(), next.data(), n);
    mu.swap(next);
    if (residual < options.tolerance) return mu;
  }

  Eigen::MatrixXd a = m.transpose();
  a.diagonal().array() -= 1.0;
  return solve_left_null(a);
}

DistributionVector bd_stationary(const PosteriorModel& model, std::size_t k) {
  return stationary_distribution(build_bd_rate_matrix(model, k));
}

double tv_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error("tv_distance: length mismatch (" + std::to_string(a.size()) + " vs " +
                std::to_string(b.size()) + ")");
  }
  return 0.5 * simd::active_kernels().l1_distance(a.data(), b.data(), a.size());
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw Error("loglog_slope needs >= 2 paired points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw NumericalError("loglog_slope needs positive values");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(x.size());
  const double den = n * sxx - sx * sx;
  if (den == 0.0) throw NumericalError("loglog_slope: x values are all equal");
  return (n * sxy - sx * sy) / den;
}

}  // namespace mjmcmc::oracle
