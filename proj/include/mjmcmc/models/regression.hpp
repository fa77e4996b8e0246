#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <span>

namespace mjmcmc::models {

struct RSquared {
  double value = 0.0;
  bool rank_deficient = false;
};

/// Coefficient of determination of the least-squares fit of y on the active
/// columns of x, without intercept: 1 - RSS / sum(y_i^2). Rank-deficient
/// designs use the minimum-norm solution and set `rank_deficient`.
RSquared r_squared(const Eigen::VectorXd& y, const Eigen::MatrixXd& x,
                   std::span<const std::size_t> active);

struct LogisticOptions {
  int max_iterations = 100;
  double gradient_tolerance = 1e-8;
  double ridge = 1e-6;
  /// Linear predictors beyond this magnitude are treated as separation.
  double separation_threshold = 25.0;
};

struct LogisticFit {
  Eigen::VectorXd coefficients;
  double log_likelihood = 0.0;
  int iterations = 0;
  bool converged = false;
  bool separated = false;
};

/// Maximum-likelihood logistic regression by iteratively reweighted least
/// squares. `design` must already contain the intercept column if one is wanted.
LogisticFit fit_logistic(const Eigen::MatrixXd& design, const Eigen::VectorXd& y,
                         const LogisticOptions& options = {});

/// Residual sum of squares of regressing column `node` on `neighbours`, from
/// the scatter matrix S = Y^T Y: S_hh - S_hA S_AA^{-1} S_Ah. Throws
/// IllConditionedMarginal if S_AA is not positive definite.
double conditional_rss(const Eigen::MatrixXd& scatter, std::size_t node,
                       std::span<const std::uint32_t> neighbours);

/// Fractional marginal pseudo-likelihood node score log p(y_h | y_A) for n
/// centred observations and |A| = d neighbours:
///   -(n-1)/2 log(pi) + lgamma((n+d)/2) - lgamma((d+1)/2)
///   - (2d+1)/2 log(n) - (n-1)/2 log(RSS_h|A).
/// Throws IllConditionedMarginal when d >= n.
double fmpl_node_score(const Eigen::MatrixXd& scatter, std::size_t n, std::size_t node,
                       std::span<const std::uint32_t> neighbours);

}  // namespace mjmcmc::models
