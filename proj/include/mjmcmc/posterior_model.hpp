#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "mjmcmc/binary_model.hpp"

namespace mjmcmc {

/// Evaluator for single-flip posterior ratios on {0,1}^k.
///
/// Implementations must be safe for concurrent const calls against the same
/// (immutable) model state.
class PosteriorModel {
 public:
  virtual ~PosteriorModel() = default;

  /// Number of elements k.
  virtual std::size_t size() const = 0;

  /// log( p(m^i | y) / p(m | y) ).
  virtual double log_ratio(const BinaryModel& m, std::size_t i) const = 0;

  /// Indices whose log ratio may change when element i flips (including i).
  /// std::nullopt means "potentially all of them".
  virtual std::optional<std::vector<std::size_t>> dependents(std::size_t /*i*/) const {
    return std::nullopt;
  }

  /// Lower bound applied to every rate so that rates stay strictly positive.
  virtual double rate_floor() const { return std::numeric_limits<double>::min(); }
};

}  // namespace mjmcmc
