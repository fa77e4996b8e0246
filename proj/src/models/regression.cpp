#include "mjmcmc/models/regression.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mjmcmc/error.hpp"

namespace mjmcmc::models {

RSquared r_squared(const Eigen::VectorXd& y, const Eigen::MatrixXd& x,
                   std::span<const std::size_t> active) {
  const double tss = y.squaredNorm();
  if (!(tss > 0.0)) throw NumericalError("R^2 undefined: total sum of squares is zero");
  if (active.empty()) return {};

  Eigen::MatrixXd xa(x.rows(), static_cast<Eigen::Index>(active.size()));
  for (std::size_t c = 0; c < active.size(); ++c)
    xa.col(static_cast<Eigen::Index>(c)) = x.col(static_cast<Eigen::Index>(active[c]));

  RSquared out;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(xa);
  Eigen::VectorXd residual;
  if (qr.rank() < xa.cols()) {
    out.rank_deficient = true;
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(xa);
    residual = y - xa * cod.solve(y);
  } else {
    residual = y - xa * qr.solve(y);
  }
  out.value = std::clamp(1.0 - residual.squaredNorm() / tss, 0.0, 1.0);
  return out;
}

namespace {

double log1p_exp(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

double logistic_log_likelihood(const Eigen::VectorXd& eta, const Eigen::VectorXd& y) {
  double ll = 0.0;
  for (Eigen::Index i = 0; i < eta.size(); ++i) ll += y[i] * eta[i] - log1p_exp(eta[i]);
  return ll;
}

}  // namespace

LogisticFit fit_logistic(const Eigen::MatrixXd& design, const Eigen::VectorXd& y,
                         const LogisticOptions& options) {
  const Eigen::Index d = design.cols();
  LogisticFit fit;
  fit.coefficients = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd eta = Eigen::VectorXd::Zero(design.rows());
  fit.log_likelihood = logistic_log_likelihood(eta, y);

  for (int it = 0; it <= options.max_iterations; ++it) {
    const Eigen::VectorXd p = eta.unaryExpr([](double v) { return 1.0 / (1.0 + std::exp(-v)); });
    const Eigen::VectorXd gradient = design.transpose() * (y - p);
    if (gradient.lpNorm<Eigen::Infinity>() < options.gradient_tolerance) {
      fit.converged = true;
      fit.iterations = it;
      break;
    }
    if (it == options.max_iterations) {
      fit.iterations = it;
      break;
    }
    const Eigen::VectorXd w = p.array() * (1.0 - p.array());
    Eigen::MatrixXd hessian = design.transpose() * w.asDiagonal() * design;
    hessian.diagonal().array() += options.ridge;
    const Eigen::VectorXd step = hessian.ldlt().solve(gradient);

    // Newton step with halving on a decrease of the log-likelihood.
    double scale = 1.0;
    for (int half = 0; half < 30; ++half, scale *= 0.5) {
      const Eigen::VectorXd trial = fit.coefficients + scale * step;
      const Eigen::VectorXd trial_eta = design * trial;
      const double ll = logistic_log_likelihood(trial_eta, y);
      if (ll >= fit.log_likelihood - 1e-12 * std::abs(fit.log_likelihood) || half == 29) {
        fit.coefficients = trial;
        eta = trial_eta;
        fit.log_likelihood = ll;
        break;
      }
    }
  }
  fit.separated = eta.size() > 0 && eta.cwiseAbs().maxCoeff() > options.separation_threshold;
  return fit;
}

double conditional_rss(const Eigen::MatrixXd& scatter, std::size_t node,
                       std::span<const std::uint32_t> neighbours) {
  const auto h = static_cast<Eigen::Index>(node);
  const double shh = scatter(h, h);
  if (neighbours.empty()) return shh;
  const auto d = static_cast<Eigen::Index>(neighbours.size());
  Eigen::MatrixXd saa(d, d);
  Eigen::VectorXd sah(d);
  for (Eigen::Index a = 0; a < d; ++a) {
    sah[a] = scatter(neighbours[a], h);
    for (Eigen::Index b = 0; b < d; ++b) saa(a, b) = scatter(neighbours[a], neighbours[b]);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(saa);
  if (llt.info() != Eigen::Success)
    throw IllConditionedMarginal(node, neighbours.size(), "neighbour scatter matrix is not positive definite");
  const double rss = shh - sah.dot(llt.solve(sah));
  if (!(rss > 0.0))
    throw IllConditionedMarginal(node, neighbours.size(), "non-positive conditional residual");
  return rss;
}

double fmpl_node_score(const Eigen::MatrixXd& scatter, std::size_t n, std::size_t node,
                       std::span<const std::uint32_t> neighbours) {
  const std::size_t d = neighbours.size();
  if (d >= n) throw IllConditionedMarginal(node, d, "neighbour count must be below the sample size " + std::to_string(n));
  const double nd = static_cast<double>(n);
  const double dd = static_cast<double>(d);
  const double rss = conditional_rss(scatter, node, neighbours);
  return -0.5 * (nd - 1.0) * std::log(std::numbers::pi) + std::lgamma(0.5 * (nd + dd)) -
         std::lgamma(0.5 * (dd + 1.0)) - 0.5 * (2.0 * dd + 1.0) * std::log(nd) -
         0.5 * (nd - 1.0) * std::log(rss);
}

}  // namespace mjmcmc::models
