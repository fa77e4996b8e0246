#include "mjmcmc/io/runner.hpp"

#include "mjmcmc/error.hpp"
#include "mjmcmc/harness/benchmark.hpp"
#include "mjmcmc/harness/metrics.hpp"
#include "mjmcmc/io/csv.hpp"
#include "mjmcmc/io/outputs.hpp"
#include "mjmcmc/models/bvs.hpp"
#include "mjmcmc/models/ggm.hpp"
#include "mjmcmc/models/ising.hpp"
#include "mjmcmc/models/table.hpp"
#include "mjmcmc/samplers.hpp"

namespace mjmcmc::io {
namespace {

std::vector<std::uint8_t> load_truth(const std::string& path, std::size_t k) {
  const LoadedMatrix m = load_matrix_csv(path, MatrixKind::Binary);
  if (m.values.size() != static_cast<Eigen::Index>(k))
    throw ConfigError("truth: " + path + " has " + std::to_string(m.values.size()) +
                      " values, model has " + std::to_string(k) + " elements");
  std::vector<std::uint8_t> truth;
  for (Eigen::Index r = 0; r < m.values.rows(); ++r)
    for (Eigen::Index c = 0; c < m.values.cols(); ++c) truth.push_back(m.values(r, c) != 0.0);
  return truth;
}

}  // namespace

LoadedModel load_model(const RunConfig& config) {
  LoadedModel out;
  switch (config.model) {
    case ModelKind::Toy:
      out.model = std::make_unique<models::TablePosterior>(
          models::TablePosterior::random(config.toy_k, config.seed));
      break;
    case ModelKind::Ggm: {
      LoadedMatrix m = load_matrix_csv(config.data, MatrixKind::Real);
      auto model = std::make_unique<models::GgmModel>(std::move(m.values),
                                                      models::GgmOptions{config.prior, 1'000'000});
      out.edges = std::make_unique<models::EdgeIndex>(model->edge_index());
      out.model = std::move(model);
      break;
    }
    case ModelKind::Ising: {
      LoadedMatrix m = load_matrix_csv(config.data, MatrixKind::Binary);
      models::IsingOptions opts;
      opts.prior_density = config.prior;
      opts.ebic_gamma = config.ebic_gamma;
      auto model = std::make_unique<models::IsingModel>(std::move(m.values), opts);
      out.edges = std::make_unique<models::EdgeIndex>(model->edge_index());
      out.model = std::move(model);
      break;
    }
    case ModelKind::Bvs: {
      LoadedMatrix m = load_matrix_csv(config.data, MatrixKind::Real);
      if (m.values.cols() < 2) throw ConfigError("data: bvs needs a response column and at least one predictor");
      models::BvsOptions opts;
      opts.g = config.g.value_or(static_cast<double>(m.values.rows()));
      opts.prior_inclusion = config.prior;
      Eigen::VectorXd y = m.values.col(0);
      Eigen::MatrixXd x = m.values.rightCols(m.values.cols() - 1);
      out.model = std::make_unique<models::BvsModel>(std::move(y), std::move(x), opts);
      break;
    }
  }
  return out;
}

RunResult execute_run(const RunConfig& config, std::size_t threads) {
  validate(config);
  const LoadedModel loaded = load_model(config);
  const PosteriorModel& model = *loaded.model;
  const BinaryModel initial(model.size());

  std::vector<std::uint8_t> truth;
  std::vector<harness::MetricsSnapshot> series;
  SampleHook hook;
  if (!config.truth.empty()) {
    truth = load_truth(config.truth, model.size());
    hook = harness::metrics_hook(truth, {}, config.iters, series);
  }

  RunResult result;
  switch (config.sampler) {
    case SamplerChoice::Mj: {
      MjOptions o;
      o.iterations = config.iters;
      o.cap = cap_of(config);
      o.burn_in = config.burn_in;
      o.seed = config.seed;
      o.checkpoint_interval = config.checkpoint;
      o.threads = threads;
      o.on_sample = hook;
      result.trace = run_mj_mcmc(model, initial, parse_schedule_spec(config.eps), o);
      break;
    }
    case SamplerChoice::Bd: {
      BdOptions o;
      o.events = config.iters;
      o.burn_in = config.burn_in;
      o.seed = config.seed;
      o.checkpoint_interval = config.checkpoint;
      o.threads = threads;
      o.on_sample = hook;
      result.trace = run_bd(model, initial, o);
      break;
    }
    case SamplerChoice::Mh: {
      MhOptions o;
      o.iterations = config.iters;
      o.burn_in = config.burn_in;
      o.seed = config.seed;
      o.checkpoint_interval = config.checkpoint;
      o.threads = threads;
      o.on_sample = hook;
      result.trace = run_mh_corrected(model, initial, parse_schedule_spec(config.eps).at(1), o);
      break;
    }
  }
  result.inclusion = harness::inclusion_probabilities(result.trace);
  std::optional<std::span<const harness::MetricsSnapshot>> metrics;
  if (!truth.empty()) metrics = std::span<const harness::MetricsSnapshot>(series);
  result.files = write_outputs(config.out, config, result.trace, result.inclusion,
                               loaded.edges.get(), metrics);
  return result;
}

}  // namespace mjmcmc::io
