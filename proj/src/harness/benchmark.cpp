#include "mjmcmc/harness/benchmark.hpp"

#include <chrono>
#include <cmath>
#include <memory>

#include "mjmcmc/error.hpp"
#include "mjmcmc/executor.hpp"

namespace mjmcmc::harness {
namespace {

MetricsReport run_one(const PosteriorModel& model, const std::vector<std::uint8_t>& truth,
                      const BinaryModel& initial, const SamplerConfig& config,
                      const CheckpointSchedule& checkpoints) {
  if (config.iterations == 0) throw ConfigError("benchmark config '" + config.name + "' has no iterations");
  MetricsReport report;
  report.name = config.name;
  const auto start = std::chrono::steady_clock::now();
  const SampleHook hook = metrics_hook(truth, checkpoints, config.iterations, report.series);

  ChainTrace trace;
  switch (config.kind) {
    case SamplerKind::BirthDeath: {
      BdOptions o;
      o.events = config.iterations;
      o.burn_in = 0.0;
      o.seed = config.seed;
      o.threads = 1;
      o.on_sample = hook;
      trace = run_bd(model, initial, o);
      break;
    }
    case SamplerKind::MultipleJump: {
      MjOptions o;
      o.iterations = config.iterations;
      o.cap = config.cap;
      o.burn_in = 0.0;
      o.seed = config.seed;
      o.threads = 1;
      o.on_sample = hook;
      trace = run_mj_mcmc(model, initial, config.schedule, o);
      break;
    }
    case SamplerKind::MhCorrected: {
      MhOptions o;
      o.iterations = config.iterations;
      o.burn_in = 0.0;
      o.seed = config.seed;
      o.threads = 1;
      o.on_sample = hook;
      trace = run_mh_corrected(model, initial, config.schedule.at(1), o);
      break;
    }
  }
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.iterations = config.iterations;
  report.inclusion = inclusion_probabilities(trace);
  report.final = evaluate(report.inclusion, truth);
  return report;
}

}  // namespace

SampleHook metrics_hook(const std::vector<std::uint8_t>& truth, const CheckpointSchedule& checkpoints,
                        std::size_t last_sample, std::vector<MetricsSnapshot>& out) {
  if (!(checkpoints.factor > 1.0) || !(checkpoints.first_seconds > 0.0))
    throw ConfigError("checkpoint schedule needs first_seconds > 0 and factor > 1");
  struct State {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double next_time;
  };
  auto state = std::make_shared<State>();
  state->next_time = checkpoints.first_seconds;
  return [&truth, checkpoints, last_sample, &out, state](std::size_t s, const BinaryModel&,
                                                         const ChainTrace& trace) {
    const double now =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - state->start).count();
    const bool by_iter = checkpoints.every_iterations > 0 && s % checkpoints.every_iterations == 0;
    const bool by_time = now >= state->next_time;
    if (!(by_iter || by_time || s == last_sample) || trace.accumulated_weight() <= 0.0) return;
    while (state->next_time <= now) state->next_time *= checkpoints.factor;
    out.push_back({now, s, evaluate(inclusion_probabilities(trace), truth)});
  };
}

std::vector<MetricsReport> run_benchmark(const PosteriorModel& model,
                                         const std::vector<std::uint8_t>& truth,
                                         const BinaryModel& initial,
                                         const std::vector<SamplerConfig>& configs,
                                         const CheckpointSchedule& checkpoints,
                                         std::size_t threads) {
  if (truth.size() != model.size()) throw Error("truth length does not match the model");
  std::vector<MetricsReport> reports(configs.size());
  Executor(threads == 0 ? 1 : threads)
      .parallel_for(
          configs.size(),
          [&](std::size_t b, std::size_t e) {
            for (std::size_t c = b; c < e; ++c)
              reports[c] = run_one(model, truth, initial, configs[c], checkpoints);
          },
          1);
  return reports;
}

std::optional<std::size_t> iterations_to_threshold(const MetricsReport& report, double threshold) {
  for (const auto& snap : report.series)
    if (snap.metrics.auc_pr >= threshold) return snap.iteration;
  return std::nullopt;
}

}  // namespace mjmcmc::harness
