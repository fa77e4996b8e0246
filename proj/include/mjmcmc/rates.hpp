#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mjmcmc/binary_model.hpp"
#include "mjmcmc/executor.hpp"
#include "mjmcmc/posterior_model.hpp"

namespace mjmcmc {

/// Birth-death rates q_i(m) = min{1, p(m^i|y)/p(m|y)} at one state.
struct RateVector {
  std::vector<double> rates;
  std::vector<double> log_rates;  // log q_i = min{0, log ratio}, before flooring
  std::uint64_t state_id = 0;

  std::size_t size() const noexcept { return rates.size(); }
  /// lambda(m), the total exit rate.
  double total() const noexcept;
};

/// Stable 64-bit fingerprint of a state, used as RateVector::state_id.
std::uint64_t state_fingerprint(const BinaryModel& m) noexcept;

/// Rate for a single log ratio, computed in the log domain: exp(min{0, lr}) floored.
double rate_from_log_ratio(double log_ratio, double floor) noexcept;

/// All k rates at m, evaluated in parallel. Throws ModelEvaluationError for a
/// non-finite log ratio (lowest failing index when several fail).
RateVector compute_rates(const PosteriorModel& model, const BinaryModel& m,
                         const Executor& executor = Executor(1));

/// Recomputes the rates of `rates` after the elements in `flipped` changed
/// (m is the new state). Uses PosteriorModel::dependents to limit work and falls
/// back to a full recomputation when the affected set is large.
void update_rates(const PosteriorModel& model, const BinaryModel& m,
                  std::span<const std::uint32_t> flipped, RateVector& rates,
                  const Executor& executor = Executor(1));

}  // namespace mjmcmc
