#pragma once

#include <vector>

#include "mjmcmc/posterior_model.hpp"

namespace mjmcmc::models {

/// p(m | y) = prod_i p(m_i | y), given the marginals p(m_i = 1 | y).
class FactorizableModel final : public PosteriorModel {
 public:
  explicit FactorizableModel(std::vector<double> marginals);

  std::size_t size() const override { return marginals_.size(); }
  double log_ratio(const BinaryModel& m, std::size_t i) const override;
  std::optional<std::vector<std::size_t>> dependents(std::size_t i) const override {
    return std::vector<std::size_t>{i};
  }

  const std::vector<double>& marginals() const noexcept { return marginals_; }
  /// Probability of the packed state `index` (k <= 63).
  double probability(std::uint64_t index) const;

 private:
  std::vector<double> marginals_;
  std::vector<double> log_odds_;
};

}  // namespace mjmcmc::models
