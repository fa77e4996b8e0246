#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mjmcmc/harness/metrics.hpp"
#include "mjmcmc/posterior_model.hpp"
#include "mjmcmc/samplers.hpp"
#include "mjmcmc/schedule.hpp"

namespace mjmcmc::harness {

enum class SamplerKind { BirthDeath, MultipleJump, MhCorrected };

struct SamplerConfig {
  std::string name;
  SamplerKind kind = SamplerKind::MultipleJump;
  EpsilonSchedule schedule = EpsilonSchedule::constant(0.3);
  /// Iterations for MJ / MH, events for BD.
  std::size_t iterations = 1000;
  std::optional<MaxJumpCap> cap;
  std::uint64_t seed = 1;
};

/// Metric snapshots are taken at wall-clock times first_seconds * factor^j
/// and, when every_iterations > 0, at every multiple of it. The final sample
/// is always snapshotted.
struct CheckpointSchedule {
  double first_seconds = 0.01;
  double factor = 1.5;
  std::size_t every_iterations = 0;
};

struct MetricsSnapshot {
  double wall_time = 0.0;
  std::size_t iteration = 0;
  Metrics metrics;
};

struct MetricsReport {
  std::string name;
  Metrics final;
  double wall_time = 0.0;
  std::size_t iterations = 0;
  std::vector<MetricsSnapshot> series;
  std::vector<double> inclusion;
};

/// Hook appending snapshots of the running inclusion accumulator to `out`
/// (skipped while the accumulator is still empty, e.g. during burn-in).
/// `last_sample` is the index of the final sample, which is always kept.
SampleHook metrics_hook(const std::vector<std::uint8_t>& truth, const CheckpointSchedule& checkpoints,
                        std::size_t last_sample, std::vector<MetricsSnapshot>& out);

/// Runs every config from `initial` against `truth`. Snapshots use the running
/// inclusion accumulator with no burn-in. Configs run in parallel when
/// threads > 1; each run itself is single-threaded.
std::vector<MetricsReport> run_benchmark(const PosteriorModel& model,
                                         const std::vector<std::uint8_t>& truth,
                                         const BinaryModel& initial,
                                         const std::vector<SamplerConfig>& configs,
                                         const CheckpointSchedule& checkpoints = {},
                                         std::size_t threads = 1);

/// First snapshot iteration whose AUC-PR reaches `threshold`.
std::optional<std::size_t> iterations_to_threshold(const MetricsReport& report, double threshold);

}  // namespace mjmcmc::harness
