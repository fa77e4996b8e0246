#pragma once

#include <Eigen/Dense>
#include <atomic>
#include <memory>

#include "mjmcmc/models/graph.hpp"
#include "mjmcmc/models/regression.hpp"
#include "mjmcmc/models/score_cache.hpp"
#include "mjmcmc/posterior_model.hpp"

namespace mjmcmc::models {

struct IsingOptions {
  double prior_density = 0.5;
  /// Extended-BIC parameter; 0 gives the plain BIC.
  double ebic_gamma = 0.0;
  std::size_t cache_capacity = 1'000'000;
  double rate_floor = 1e-12;
  LogisticOptions logistic;
};

/// Ising structure posterior with the nodewise pseudo-likelihood. Each node
/// marginal p_h(G) is approximated by exp(-EBIC_h / 2) of the logistic
/// regression of y_h on its neighbours (plus intercept):
///   EBIC_h = -2 loglik + (d + 1) log n + 2 gamma d log(p - 1).
class IsingModel final : public PosteriorModel {
 public:
  /// `data` is an n x p matrix of 0/1 values.
  IsingModel(Eigen::MatrixXd data, IsingOptions options = {});

  std::size_t size() const override { return edges_.edges(); }
  /// Failed fits (separation) map to log(rate_floor), i.e. the move is
  /// treated as rejected.
  double log_ratio(const BinaryModel& g, std::size_t e) const override;
  std::optional<std::vector<std::size_t>> dependents(std::size_t e) const override {
    return edges_.incident(e);
  }
  double rate_floor() const override { return options_.rate_floor; }

  /// log p_h(G) = -EBIC_h / 2. Throws FitError on a failed fit.
  double node_score(std::size_t node, std::span<const std::uint32_t> neighbours) const;
  /// Uncached EBIC of the node regression.
  double node_bic(std::size_t node, std::span<const std::uint32_t> neighbours) const;

  double prior_log_odds() const noexcept { return prior_log_odds_; }
  const EdgeIndex& edge_index() const noexcept { return edges_; }
  std::size_t fit_failures() const noexcept { return fit_failures_.load(); }

 private:
  Eigen::MatrixXd data_;
  EdgeIndex edges_;
  IsingOptions options_;
  double prior_log_odds_;
  std::unique_ptr<ScoreCache> cache_;
  mutable std::atomic<std::size_t> fit_failures_{0};
};

}  // namespace mjmcmc::models
