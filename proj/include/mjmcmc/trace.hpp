#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mjmcmc/binary_model.hpp"

namespace mjmcmc {

/// Record of a chain run.
///
/// Sample s (1-based) is the state occupied during iteration s; sample 1 is the
/// initial model. States are stored as flip deltas between consecutive samples,
/// with a full checkpoint at samples 1, 1 + C, 1 + 2C, ...
class ChainTrace {
 public:
  ChainTrace() = default;
  ChainTrace(BinaryModel initial, std::uint64_t seed, std::size_t checkpoint_interval = 1000);

  std::size_t k() const noexcept { return initial_.size(); }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t checkpoint_interval() const noexcept { return checkpoint_interval_; }

  /// Number of recorded samples.
  std::size_t size() const noexcept { return sample_count_; }

  /// Records the transition out of the most recent sample. `flips` are the
  /// indices changed to reach `next`; `next` becomes the new latest sample.
  /// `epsilon` and `waiting_time` describe the sample being left.
  void record_transition(std::span<const std::uint32_t> flips, const BinaryModel& next,
                         double epsilon, double waiting_time, double wall_time);

  /// Records the metadata of the final sample, whose outgoing transition is
  /// not kept as a sample.
  void close(double epsilon, std::size_t flips, double waiting_time, double wall_time);

  /// Adds `weight` times the latest sample to the inclusion accumulator.
  void accumulate(const BinaryModel& current, double weight);

  /// State of sample s (1-based), rebuilt from the nearest checkpoint.
  BinaryModel reconstruct(std::size_t s) const;
  /// Stored checkpoint for sample s, which must be a checkpoint sample.
  const BinaryModel& checkpoint(std::size_t s) const;
  bool is_checkpoint(std::size_t s) const noexcept;

  /// Indices flipped on the transition out of sample s.
  std::span<const std::uint32_t> flips_after(std::size_t s) const;

  const std::vector<double>& epsilons() const noexcept { return epsilons_; }
  const std::vector<std::uint32_t>& flip_counts() const noexcept { return flip_counts_; }
  const std::vector<double>& waiting_times() const noexcept { return waiting_times_; }
  const std::vector<double>& wall_times() const noexcept { return wall_times_; }

  const std::vector<double>& inclusion_accumulator() const noexcept { return accumulator_; }
  double accumulated_weight() const noexcept { return accumulated_weight_; }
  std::size_t accumulated_samples() const noexcept { return accumulated_samples_; }

  /// Count of accepted proposals (MH-corrected runs only).
  std::size_t accepted() const noexcept { return accepted_; }
  void set_accepted(std::size_t a) noexcept { accepted_ = a; }

 private:
  BinaryModel initial_;
  std::uint64_t seed_ = 0;
  std::size_t checkpoint_interval_ = 1000;
  std::size_t sample_count_ = 0;

  std::vector<BinaryModel> checkpoints_;
  std::vector<std::uint32_t> delta_indices_;
  std::vector<std::size_t> delta_offsets_{0};

  std::vector<double> epsilons_;
  std::vector<std::uint32_t> flip_counts_;
  std::vector<double> waiting_times_;
  std::vector<double> wall_times_;

  std::vector<double> accumulator_;
  double accumulated_weight_ = 0.0;
  std::size_t accumulated_samples_ = 0;
  std::size_t accepted_ = 0;
};

}  // namespace mjmcmc
