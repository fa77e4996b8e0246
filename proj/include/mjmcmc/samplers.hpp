#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mjmcmc/binary_model.hpp"
#include "mjmcmc/counter_rng.hpp"
#include "mjmcmc/executor.hpp"
#include "mjmcmc/posterior_model.hpp"
#include "mjmcmc/rates.hpp"
#include "mjmcmc/schedule.hpp"
#include "mjmcmc/trace.hpp"

namespace mjmcmc {

/// Limits the number of flips per iteration to ceil(r * k) during the first
/// `active_iterations` iterations.
struct MaxJumpCap {
  double r = 1.0;
  std::size_t active_iterations = 5;

  std::size_t limit(std::size_t k) const;
  bool active(std::size_t iteration) const noexcept { return iteration <= active_iterations; }
};

/// Called once per sample, after the sample has been added to the trace's
/// accumulator. This is also the hook for drawing model parameters
/// theta ~ p(theta | m, y) alongside each sampled model.
using SampleHook =
    std::function<void(std::size_t s, const BinaryModel& m, const ChainTrace& trace)>;

/// Flip set of one multiple-jump iteration: index i is flipped when
/// U(iteration, i) < q_i * eps. With a limit, a uniformly random subset of
/// size `limit` is retained. Result is sorted.
std::vector<std::uint32_t> sample_flips(const RateVector& rates, double eps,
                                        std::optional<std::size_t> limit, const CounterRng& rng,
                                        std::uint64_t iteration);

struct MjStep {
  BinaryModel model;
  std::vector<std::uint32_t> flips;
};

/// One multiple-jump transition from m.
MjStep mj_step(const BinaryModel& m, const RateVector& rates, double eps,
               const std::optional<MaxJumpCap>& cap, const CounterRng& rng,
               std::uint64_t iteration);

struct MjOptions {
  std::size_t iterations = 1000;
  std::optional<MaxJumpCap> cap;
  double burn_in = 0.25;
  std::uint64_t seed = 1;
  std::size_t checkpoint_interval = 1000;
  std::size_t threads = 0;
  SampleHook on_sample;
};

/// Multiple-jump MCMC over S iterations. Samples with s > burn_in * S feed the
/// inclusion accumulator with unit weight.
ChainTrace run_mj_mcmc(const PosteriorModel& model, const BinaryModel& initial,
                       const EpsilonSchedule& schedule, const MjOptions& options);

struct BdOptions {
  /// Exactly one of `events` and `total_time` must be positive.
  std::size_t events = 0;
  double total_time = 0.0;
  double burn_in = 0.25;
  std::uint64_t seed = 1;
  std::size_t checkpoint_interval = 1000;
  std::size_t threads = 0;
  SampleHook on_sample;
};

/// Continuous-time birth-death sampler (embedded-chain form). Each visited
/// state is weighted by its holding time. With an event budget the burn-in
/// drops the first burn_in * events states; with a time budget it drops the
/// interval [0, burn_in * T).
ChainTrace run_bd(const PosteriorModel& model, const BinaryModel& initial,
                  const BdOptions& options);

struct MhStep {
  BinaryModel model;
  RateVector rates;  // rates at `model`
  std::vector<std::uint32_t> proposed;
  double log_acceptance = 0.0;
  bool accepted = true;
};

/// Metropolis-Hastings step using the multiple-jump kernel as the proposal.
/// Exact for pi at any fixed eps.
MhStep mh_corrected_step(const BinaryModel& m, const RateVector& rates_at_m, double eps,
                         const PosteriorModel& model, const CounterRng& rng,
                         std::uint64_t iteration, const Executor& executor = Executor(1));

struct MhOptions {
  std::size_t iterations = 1000;
  double burn_in = 0.25;
  std::uint64_t seed = 1;
  std::size_t checkpoint_interval = 1000;
  std::size_t threads = 0;
  SampleHook on_sample;
};

ChainTrace run_mh_corrected(const PosteriorModel& model, const BinaryModel& initial, double eps,
                            const MhOptions& options);

/// log P_eps(m, m') for the multiple-jump kernel with rates at m and flip set H.
double log_mj_kernel(const RateVector& rates_at_m, std::span<const std::uint32_t> flips,
                     double eps);

}  // namespace mjmcmc
