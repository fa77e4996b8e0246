#pragma once

#include <Eigen/Dense>
#include <memory>

#include "mjmcmc/models/graph.hpp"
#include "mjmcmc/models/score_cache.hpp"
#include "mjmcmc/posterior_model.hpp"

namespace mjmcmc::models {

struct GgmOptions {
  /// Bernoulli prior edge inclusion probability.
  double prior_density = 0.5;
  std::size_t cache_capacity = 1'000'000;
};

/// Gaussian graphical model structure posterior. Elements are edges in
/// EdgeIndex order; the Bayes factor of an edge flip is the ratio of the two
/// affected fractional marginal pseudo-likelihood node scores.
class GgmModel final : public PosteriorModel {
 public:
  /// `data` is n x p; columns are centred on construction.
  GgmModel(Eigen::MatrixXd data, GgmOptions options = {});

  std::size_t size() const override { return edges_.edges(); }
  double log_ratio(const BinaryModel& g, std::size_t e) const override;
  std::optional<std::vector<std::size_t>> dependents(std::size_t e) const override {
    return edges_.incident(e);
  }

  /// log p(y_node | y_neighbours), cached by (node, neighbour set).
  double node_score(std::size_t node, std::span<const std::uint32_t> neighbours) const;

  /// Prior log odds log(rho / (1 - rho)) added for an edge addition.
  double prior_log_odds() const noexcept { return prior_log_odds_; }

  const EdgeIndex& edge_index() const noexcept { return edges_; }
  std::size_t observations() const noexcept { return n_; }
  const Eigen::MatrixXd& scatter() const noexcept { return scatter_; }
  /// Column means of the data as given, before centring.
  const Eigen::VectorXd& original_means() const noexcept { return means_; }
  const ScoreCache& cache() const noexcept { return *cache_; }

 private:
  std::size_t n_;
  EdgeIndex edges_;
  Eigen::MatrixXd scatter_;
  Eigen::VectorXd means_;
  double prior_log_odds_;
  std::unique_ptr<ScoreCache> cache_;
};

}  // namespace mjmcmc::models
