#include "mjmcmc/models/factorizable.hpp"

#include <cmath>
#include <string>

#include "mjmcmc/error.hpp"

namespace mjmcmc::models {

FactorizableModel::FactorizableModel(std::vector<double> marginals)
    : marginals_(std::move(marginals)) {
  if (marginals_.empty()) throw ConfigError("factorizable model needs at least one marginal");
  log_odds_.reserve(marginals_.size());
  for (std::size_t i = 0; i < marginals_.size(); ++i) {
    const double p = marginals_[i];
    if (!(p > 0.0 && p < 1.0))
      throw ConfigError("marginal " + std::to_string(i) + " must lie in (0,1), got " + std::to_string(p));
    log_odds_.push_back(std::log(p) - std::log1p(-p));
  }
}

double FactorizableModel::log_ratio(const BinaryModel& m, std::size_t i) const {
  // log p(1 - m_i) / p(m_i)
  return m[i] ? -log_odds_[i] : log_odds_[i];
}

double FactorizableModel::probability(std::uint64_t index) const {
  double p = 1.0;
  for (std::size_t i = 0; i < marginals_.size(); ++i)
    p *= ((index >> i) & 1u) ? marginals_[i] : 1.0 - marginals_[i];
  return p;
}

}  // namespace mjmcmc::models
