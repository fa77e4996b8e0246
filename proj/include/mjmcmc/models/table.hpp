#pragma once

#include <cstdint>
#include <vector>

#include "mjmcmc/posterior_model.hpp"

namespace mjmcmc::models {

/// Posterior given explicitly by (unnormalised) log weights over all 2^k states,
/// indexed by BinaryModel::to_index(). Used for small-space experiments.
class TablePosterior final : public PosteriorModel {
 public:
  TablePosterior(std::size_t k, std::vector<double> log_weights);

  /// Log weights drawn i.i.d. Normal(0, scale^2).
  static TablePosterior random(std::size_t k, std::uint64_t seed, double scale = 1.0);

  /// Normalised probabilities (k <= 20).
  static TablePosterior from_probabilities(std::size_t k, const std::vector<double>& probabilities);

  std::size_t size() const override { return k_; }
  double log_ratio(const BinaryModel& m, std::size_t i) const override;

  const std::vector<double>& log_weights() const noexcept { return log_weights_; }
  /// Normalised probabilities.
  std::vector<double> probabilities() const;

 private:
  std::size_t k_;
  std::vector<double> log_weights_;
};

}  // namespace mjmcmc::models
