#include "mjmcmc/models/table.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mjmcmc/error.hpp"

namespace mjmcmc::models {

TablePosterior::TablePosterior(std::size_t k, std::vector<double> log_weights)
    : k_(k), log_weights_(std::move(log_weights)) {
  if (k == 0 || k > 20) throw CapacityError("table posterior supports 1 <= k <= 20");
  if (log_weights_.size() != (std::size_t{1} << k))
    throw Error("table posterior needs 2^k log weights");
  for (double w : log_weights_)
    if (!std::isfinite(w)) throw Error("table posterior log weights must be finite");
}

TablePosterior TablePosterior::random(std::size_t k, std::uint64_t seed, double scale) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, scale);
  std::vector<double> w(std::size_t{1} << k);
  for (auto& x : w) x = normal(gen);
  return TablePosterior(k, std::move(w));
}

TablePosterior TablePosterior::from_probabilities(std::size_t k,
                                                  const std::vector<double>& probabilities) {
  std::vector<double> w(probabilities.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(probabilities[i] > 0.0)) throw Error("table probabilities must be strictly positive");
    w[i] = std::log(probabilities[i]);
  }
  return TablePosterior(k, std::move(w));
}

double TablePosterior::log_ratio(const BinaryModel& m, std::size_t i) const {
  const auto idx = m.to_index();
  return log_weights_[idx ^ (std::uint64_t{1} << i)] - log_weights_[idx];
}

std::vector<double> TablePosterior::probabilities() const {
  const double top = *std::max_element(log_weights_.begin(), log_weights_.end());
  std::vector<double> p(log_weights_.size());
  double z = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) z += p[i] = std::exp(log_weights_[i] - top);
  for (auto& x : p) x /= z;
  return p;
}

}  // namespace mjmcmc::models
