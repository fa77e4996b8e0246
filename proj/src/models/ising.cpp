#include "mjmcmc/models/ising.hpp"

#include <cmath>
#include <limits>

#include "mjmcmc/error.hpp"

namespace mjmcmc::models {

IsingModel::IsingModel(Eigen::MatrixXd data, IsingOptions options)
    : data_(std::move(data)),
      edges_(static_cast<std::size_t>(data_.cols())),
      options_(options),
      cache_(std::make_unique<ScoreCache>(options.cache_capacity)) {
  if (data_.rows() < 2) throw ConfigError("Ising model needs at least 2 observations");
  if (!(options.prior_density > 0.0 && options.prior_density < 1.0))
    throw ConfigError("prior density must lie in (0,1)");
  if (!(options.ebic_gamma >= 0.0)) throw ConfigError("ebic_gamma must be non-negative");
  for (Eigen::Index r = 0; r < data_.rows(); ++r)
    for (Eigen::Index c = 0; c < data_.cols(); ++c)
      if (data_(r, c) != 0.0 && data_(r, c) != 1.0)
        throw ConfigError("Ising data must be binary (0/1)");
  prior_log_odds_ = std::log(options.prior_density) - std::log1p(-options.prior_density);
}

double IsingModel::node_bic(std::size_t node, std::span<const std::uint32_t> neighbours) const {
  const Eigen::Index n = data_.rows();
  const auto d = static_cast<Eigen::Index>(neighbours.size());
  Eigen::MatrixXd design(n, d + 1);
  design.col(0).setOnes();
  for (Eigen::Index c = 0; c < d; ++c) design.col(c + 1) = data_.col(neighbours[c]);
  const Eigen::VectorXd y = data_.col(static_cast<Eigen::Index>(node));
  const LogisticFit fit = fit_logistic(design, y, options_.logistic);
  if (!fit.converged) throw FitError(node, "IRLS did not converge");
  if (fit.separated) throw FitError(node, "separation detected");
  const double dd = static_cast<double>(d);
  const double p = static_cast<double>(edges_.nodes());
  return -2.0 * fit.log_likelihood + (dd + 1.0) * std::log(static_cast<double>(n)) +
         2.0 * options_.ebic_gamma * dd * std::log(p - 1.0);
}

double IsingModel::node_score(std::size_t node, std::span<const std::uint32_t> neighbours) const {
  const double v = cache_->get_or_compute(make_cache_key(static_cast<std::uint32_t>(node), neighbours), [&] {
    try {
      return -0.5 * node_bic(node, neighbours);
    } catch (const FitError&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  });
  if (std::isnan(v)) throw FitError(node, "logistic fit failed");
  return v;
}

double IsingModel::log_ratio(const BinaryModel& g, std::size_t e) const {
  const auto [i, j] = edges_.endpoints(e);
  const auto nb_i = edges_.neighbours(g, i);
  const auto nb_j = edges_.neighbours(g, j);
  try {
    const double bf = node_score(i, toggled(nb_i, j)) + node_score(j, toggled(nb_j, i)) -
                      node_score(i, nb_i) - node_score(j, nb_j);
    return bf + (g[e] ? -prior_log_odds_ : prior_log_odds_);
  } catch (const FitError&) {
    fit_failures_.fetch_add(1);
    return std::log(options_.rate_floor);
  }
}

}  // namespace mjmcmc::models
