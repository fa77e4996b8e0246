#include "mjmcmc/models/ggm.hpp"

#include <cmath>

#include "mjmcmc/error.hpp"
#include "mjmcmc/models/regression.hpp"

namespace mjmcmc::models {

namespace {

double checked_log_odds(double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("prior density must lie in (0,1), got " + std::to_string(rho));
  return std::log(rho) - std::log1p(-rho);
}

}  // namespace

GgmModel::GgmModel(Eigen::MatrixXd data, GgmOptions options)
    : n_(static_cast<std::size_t>(data.rows())),
      edges_(static_cast<std::size_t>(data.cols())),
      prior_log_odds_(checked_log_odds(options.prior_density)),
      cache_(std::make_unique<ScoreCache>(options.cache_capacity)) {
  if (data.rows() < 2) throw ConfigError("GGM needs at least 2 observations");
  means_ = data.colwise().mean().transpose();
  data.rowwise() -= means_.transpose();
  scatter_ = data.transpose() * data;
}

double GgmModel::node_score(std::size_t node, std::span<const std::uint32_t> neighbours) const {
  return cache_->get_or_compute(make_cache_key(static_cast<std::uint32_t>(node), neighbours), [&] {
    return fmpl_node_score(scatter_, n_, node, neighbours);
  });
}

double GgmModel::log_ratio(const BinaryModel& g, std::size_t e) const {
  const auto [i, j] = edges_.endpoints(e);
  const auto nb_i = edges_.neighbours(g, i);
  const auto nb_j = edges_.neighbours(g, j);
  const auto nb_i_flip = toggled(nb_i, j);
  const auto nb_j_flip = toggled(nb_j, i);
  try {
    const double bf = node_score(i, nb_i_flip) + node_score(j, nb_j_flip) - node_score(i, nb_i) -
                      node_score(j, nb_j);
    return bf + (g[e] ? -prior_log_odds_ : prior_log_odds_);
  } catch (const IllConditionedMarginal& err) {
    throw ModelEvaluationError(e, err.what());
  }
}

}  // namespace mjmcmc::models
