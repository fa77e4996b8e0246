#include "mjmcmc/models/bvs.hpp"

#include <cmath>
#include <vector>

#include "mjmcmc/error.hpp"
#include "mjmcmc/models/regression.hpp"

namespace mjmcmc::models {

BvsModel::BvsModel(Eigen::VectorXd response, Eigen::MatrixXd design, BvsOptions options)
    : y_(std::move(response)),
      x_(std::move(design)),
      options_(options),
      cache_(std::make_unique<ScoreCache>(options.cache_capacity)) {
  if (y_.size() != x_.rows()) throw ConfigError("response length does not match design rows");
  if (x_.cols() == 0) throw ConfigError("design has no columns");
  if (!(options.g > 0.0)) throw ConfigError("g must be positive");
  if (!(options.prior_inclusion > 0.0 && options.prior_inclusion < 1.0))
    throw ConfigError("prior inclusion probability must lie in (0,1)");
  prior_log_odds_ = std::log(options.prior_inclusion) - std::log1p(-options.prior_inclusion);
  y_.array() -= y_.mean();
  for (Eigen::Index c = 0; c < x_.cols(); ++c) {
    const double norm = x_.col(c).norm();
    if (norm > 0.0) x_.col(c) /= norm;
  }
  if (!(y_.squaredNorm() > 0.0)) throw NumericalError("response has zero variance");
}

double BvsModel::r_squared(const BinaryModel& gamma) const {
  std::vector<std::uint32_t> active32;
  for (std::size_t i = 0; i < gamma.size(); ++i)
    if (gamma[i]) active32.push_back(static_cast<std::uint32_t>(i));
  return cache_->get_or_compute(make_cache_key(0xFFFFFFFFu, active32), [&] {
    std::vector<std::size_t> active(active32.begin(), active32.end());
    const auto r2 = models::r_squared(y_, x_, active);
    if (r2.rank_deficient) rank_deficient_.fetch_add(1);
    return r2.value;
  });
}

double BvsModel::log_bayes_factor(double r2_from, std::size_t size_from, double r2_to,
                                  std::size_t size_to) const {
  const double g = options_.g;
  const double n = static_cast<double>(observations());
  const double dim = static_cast<double>(size_from) - static_cast<double>(size_to);
  return 0.5 * dim * std::log1p(g) +
         0.5 * (n - 1.0) * (std::log1p(g * (1.0 - r2_from)) - std::log1p(g * (1.0 - r2_to)));
}

double BvsModel::log_ratio(const BinaryModel& gamma, std::size_t i) const {
  const std::size_t size_from = gamma.count();
  const BinaryModel other = gamma.flipped(i);
  const std::size_t size_to = gamma[i] ? size_from - 1 : size_from + 1;
  const double bf = log_bayes_factor(r_squared(gamma), size_from, r_squared(other), size_to);
  return bf + (gamma[i] ? -prior_log_odds_ : prior_log_odds_);
}

}  // namespace mjmcmc::models
