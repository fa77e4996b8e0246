#include "mjmcmc/samplers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "mjmcmc/error.hpp"
#include "mjmcmc/simd/kernels.hpp"

namespace mjmcmc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_burn_in(double burn_in) {
  if (!(burn_in >= 0.0 && burn_in < 1.0))
    throw ConfigError("burn-in fraction must lie in [0,1), got " + std::to_string(burn_in));
}

void check_initial(const PosteriorModel& model, const BinaryModel& initial) {
  if (initial.size() != model.size())
    throw Error("initial state has " + std::to_string(initial.size()) + " elements, model has " +
                std::to_string(model.size()));
}

// First sample index that counts toward the accumulator.
std::size_t first_kept(double burn_in, std::size_t total) {
  return static_cast<std::size_t>(std::floor(burn_in * static_cast<double>(total))) + 1;
}

template <class F>
auto with_iteration(std::size_t s, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ModelEvaluationError& e) {
    throw e.at_iteration(s);
  }
}

}  // namespace

std::size_t MaxJumpCap::limit(std::size_t k) const {
  if (!(r > 0.0 && r <= 1.0)) throw ConfigError("max jump r must lie in (0,1], got " + std::to_string(r));
  const auto cap = static_cast<std::size_t>(std::ceil(r * static_cast<double>(k)));
  return std::max<std::size_t>(1, cap);
}

std::vector<std::uint32_t> sample_flips(const RateVector& rates, double eps,
                                        std::optional<std::size_t> limit, const CounterRng& rng,
                                        std::uint64_t iteration) {
  const std::size_t k = rates.size();
  std::vector<double> u(k);
  for (std::size_t i = 0; i < k; ++i) u[i] = rng.uniform(Stream::Flip, iteration, i);
  std::vector<std::uint8_t> mask(k);
  const std::size_t count =
      simd::active_kernels().flip_mask(u.data(), rates.rates.data(), eps, mask.data(), k);

  std::vector<std::uint32_t> flips;
  flips.reserve(count);
  for (std::size_t i = 0; i < k; ++i)
    if (mask[i]) flips.push_back(static_cast<std::uint32_t>(i));

  if (limit && flips.size() > *limit) {
    // Partial Fisher-Yates: the first `limit` slots become a uniform subset.
    const std::size_t n = flips.size();
    for (std::size_t j = 0; j < *limit; ++j) {
      const double v = rng.uniform(Stream::Auxiliary, iteration, j);
      const std::size_t pick = j + std::min(n - j - 1, static_cast<std::size_t>(v * static_cast<double>(n - j)));
      std::swap(flips[j], flips[pick]);
    }
    flips.resize(*limit);
    std::sort(flips.begin(), flips.end());
  }
  return flips;
}

MjStep mj_step(const BinaryModel& m, const RateVector& rates, double eps,
               const std::optional<MaxJumpCap>& cap, const CounterRng& rng,
               std::uint64_t iteration) {
  if (rates.size() != m.size()) throw Error("rate vector does not match the state length");
  std::optional<std::size_t> limit;
  if (cap && cap->active(iteration)) limit = cap->limit(m.size());
  MjStep out{m, sample_flips(rates, eps, limit, rng, iteration)};
  out.model.flip_all(out.flips);
  return out;
}

ChainTrace run_mj_mcmc(const PosteriorModel& model, const BinaryModel& initial,
                       const EpsilonSchedule& schedule, const MjOptions& options) {
  if (options.iterations == 0) throw ConfigError("iteration count must be at least 1");
  check_burn_in(options.burn_in);
  check_initial(model, initial);

  const Executor executor(options.threads);
  const CounterRng rng(options.seed);
  const auto start = Clock::now();
  const std::size_t keep_from = first_kept(options.burn_in, options.iterations);
  const std::size_t k = model.size();

  ChainTrace trace(initial, options.seed, options.checkpoint_interval);
  BinaryModel m = initial;
  RateVector rates = with_iteration(1, [&] { return compute_rates(model, m, executor); });

  for (std::size_t s = 1; s <= options.iterations; ++s) {
    const double eps = schedule.at(s);
    if (s >= keep_from) trace.accumulate(m, 1.0);
    if (options.on_sample) options.on_sample(s, m, trace);

    std::optional<std::size_t> limit;
    if (options.cap && options.cap->active(s)) limit = options.cap->limit(k);
    const auto flips = sample_flips(rates, eps, limit, rng, s);

    if (s == options.iterations) {
      trace.close(eps, flips.size(), 1.0, seconds_since(start));
      break;
    }
    m.flip_all(flips);
    trace.record_transition(flips, m, eps, 1.0, seconds_since(start));
    with_iteration(s + 1, [&] { update_rates(model, m, flips, rates, executor); });
  }
  return trace;
}

ChainTrace run_bd(const PosteriorModel& model, const BinaryModel& initial,
                  const BdOptions& options) {
  const bool by_events = options.events > 0;
  const bool by_time = options.total_time > 0.0;
  if (by_events == by_time)
    throw ConfigError("birth-death run needs exactly one of an event budget or a time budget");
  check_burn_in(options.burn_in);
  check_initial(model, initial);

  const Executor executor(options.threads);
  const CounterRng rng(options.seed);
  const auto start = Clock::now();
  const std::size_t keep_from = by_events ? first_kept(options.burn_in, options.events) : 1;
  const double time_from = options.burn_in * options.total_time;

  ChainTrace trace(initial, options.seed, options.checkpoint_interval);
  BinaryModel m = initial;
  RateVector rates = with_iteration(1, [&] { return compute_rates(model, m, executor); });
  double clock = 0.0;

  for (std::size_t j = 1;; ++j) {
    const double lambda = rates.total();
    double wait = -std::log(rng.uniform_positive(Stream::Auxiliary, j, 0)) / lambda;

    bool last = by_events && j == options.events;
    if (by_time && clock + wait >= options.total_time) {
      wait = options.total_time - clock;
      last = true;
    }

    double weight = 0.0;
    if (by_events) {
      if (j >= keep_from) weight = wait;
    } else {
      weight = std::max(0.0, clock + wait - std::max(clock, time_from));
    }
    if (weight > 0.0) trace.accumulate(m, weight);
    if (options.on_sample) options.on_sample(j, m, trace);
    clock += wait;

    if (last) {
      trace.close(0.0, 0, wait, seconds_since(start));
      break;
    }

    // Categorical draw proportional to q_i.
    const double target = rng.uniform(Stream::Auxiliary, j, 1) * lambda;
    double cumulative = 0.0;
    std::size_t chosen = rates.size() - 1;
    for (std::size_t i = 0; i < rates.size(); ++i) {
      cumulative += rates.rates[i];
      if (target < cumulative) {
        chosen = i;
        break;
      }
    }
    const std::uint32_t flip = static_cast<std::uint32_t>(chosen);
    m.flip(chosen);
    trace.record_transition({&flip, 1}, m, 0.0, wait, seconds_since(start));
    with_iteration(j + 1, [&] { update_rates(model, m, {&flip, 1}, rates, executor); });
  }
  return trace;
}

double log_mj_kernel(const RateVector& rates_at_m, std::span<const std::uint32_t> flips,
                     double eps) {
  double total = 0.0;
  std::size_t next = 0;
  for (std::size_t i = 0; i < rates_at_m.size(); ++i) {
    const double p = rates_at_m.rates[i] * eps;
    if (next < flips.size() && flips[next] == i) {
      total += std::log(p);
      ++next;
    } else {
      total += std::log1p(-p);
    }
  }
  return total;
}

MhStep mh_corrected_step(const BinaryModel& m, const RateVector& rates_at_m, double eps,
                         const PosteriorModel& model, const CounterRng& rng,
                         std::uint64_t iteration, const Executor& executor) {
  auto flips = sample_flips(rates_at_m, eps, std::nullopt, rng, iteration);
  if (flips.empty()) return MhStep{m, rates_at_m, {}, 0.0, true};

  BinaryModel proposal = m;
  double log_target_ratio = 0.0;
  for (auto i : flips) {
    log_target_ratio += model.log_ratio(proposal, i);
    proposal.flip(i);
  }
  if (!std::isfinite(log_target_ratio))
    throw ModelEvaluationError(flips.front(), "non-finite log posterior ratio along flip path");

  RateVector rates_at_proposal = rates_at_m;
  update_rates(model, proposal, flips, rates_at_proposal, executor);

  const double log_alpha =
      std::min(0.0, log_target_ratio + log_mj_kernel(rates_at_proposal, flips, eps) -
                        log_mj_kernel(rates_at_m, flips, eps));
  const bool accept = rng.uniform(Stream::Auxiliary, iteration, 0) < std::exp(log_alpha);
  if (accept) return MhStep{std::move(proposal), std::move(rates_at_proposal), std::move(flips), log_alpha, true};
  return MhStep{m, rates_at_m, std::move(flips), log_alpha, false};
}

ChainTrace run_mh_corrected(const PosteriorModel& model, const BinaryModel& initial, double eps,
                            const MhOptions& options) {
  if (options.iterations == 0) throw ConfigError("iteration count must be at least 1");
  if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("epsilon must lie in (0,1)");
  check_burn_in(options.burn_in);
  check_initial(model, initial);

  const Executor executor(options.threads);
  const CounterRng rng(options.seed);
  const auto start = Clock::now();
  const std::size_t keep_from = first_kept(options.burn_in, options.iterations);

  ChainTrace trace(initial, options.seed, options.checkpoint_interval);
  BinaryModel m = initial;
  RateVector rates = with_iteration(1, [&] { return compute_rates(model, m, executor); });
  std::size_t accepted = 0;

  for (std::size_t s = 1; s <= options.iterations; ++s) {
    if (s >= keep_from) trace.accumulate(m, 1.0);
    if (options.on_sample) options.on_sample(s, m, trace);
    if (s == options.iterations) {
      trace.close(eps, 0, 1.0, seconds_since(start));
      break;
    }
    auto step = with_iteration(s, [&] { return mh_corrected_step(m, rates, eps, model, rng, s, executor); });
    std::vector<std::uint32_t> applied;
    if (step.accepted) {
      applied = std::move(step.proposed);
      if (!applied.empty()) ++accepted;
      m = std::move(step.model);
      rates = std::move(step.rates);
    }
    trace.record_transition(applied, m, eps, 1.0, seconds_since(start));
  }
  trace.set_accepted(accepted);
  return trace;
}

}  // namespace mjmcmc
