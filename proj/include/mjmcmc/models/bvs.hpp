#pragma once

#include <Eigen/Dense>
#include <atomic>
#include <memory>

#include "mjmcmc/models/score_cache.hpp"
#include "mjmcmc/posterior_model.hpp"

namespace mjmcmc::models {

struct BvsOptions {
  /// g-prior scale, g > 0.
  double g = 1.0;
  /// Bernoulli prior inclusion probability.
  double prior_inclusion = 0.5;
  std::size_t cache_capacity = 1'000'000;
};

/// Linear-regression variable selection under the g-prior (no intercept, unit
/// noise variance). The response is centred and every design column scaled to
/// unit Euclidean norm on construction.
///
/// log BF(gamma -> gamma^i) = ((|gamma| - |gamma^i|)/2) log(1+g)
///     + ((n-1)/2) [log(1 + g(1 - R2_gamma)) - log(1 + g(1 - R2_gamma^i))]
class BvsModel final : public PosteriorModel {
 public:
  BvsModel(Eigen::VectorXd response, Eigen::MatrixXd design, BvsOptions options = {});

  std::size_t size() const override { return static_cast<std::size_t>(x_.cols()); }
  double log_ratio(const BinaryModel& gamma, std::size_t i) const override;

  /// R^2 of the active set of gamma (cached).
  double r_squared(const BinaryModel& gamma) const;
  /// log Bayes factor for moving from R2_from with size_from to R2_to with size_to.
  double log_bayes_factor(double r2_from, std::size_t size_from, double r2_to,
                          std::size_t size_to) const;

  std::size_t observations() const noexcept { return static_cast<std::size_t>(x_.rows()); }
  const Eigen::VectorXd& response() const noexcept { return y_; }
  const Eigen::MatrixXd& design() const noexcept { return x_; }
  std::size_t rank_deficient_events() const noexcept { return rank_deficient_.load(); }

 private:
  Eigen::VectorXd y_;
  Eigen::MatrixXd x_;
  BvsOptions options_;
  double prior_log_odds_;
  std::unique_ptr<ScoreCache> cache_;
  mutable std::atomic<std::size_t> rank_deficient_{0};
};

}  // namespace mjmcmc::models
