#include "mjmcmc/trace.hpp"

#include "mjmcmc/error.hpp"
#include "mjmcmc/simd/kernels.hpp"

namespace mjmcmc {

ChainTrace::ChainTrace(BinaryModel initial, std::uint64_t seed, std::size_t checkpoint_interval)
    : initial_(std::move(initial)),
      seed_(seed),
      checkpoint_interval_(checkpoint_interval == 0 ? 1 : checkpoint_interval),
      sample_count_(1),
      accumulator_(initial_.size(), 0.0) {
  checkpoints_.push_back(initial_);
}

bool ChainTrace::is_checkpoint(std::size_t s) const noexcept {
  return s >= 1 && (s - 1) % checkpoint_interval_ == 0;
}

void ChainTrace::record_transition(std::span<const std::uint32_t> flips, const BinaryModel& next,
                                   double epsilon, double waiting_time, double wall_time) {
  delta_indices_.insert(delta_indices_.end(), flips.begin(), flips.end());
  delta_offsets_.push_back(delta_indices_.size());
  epsilons_.push_back(epsilon);
  flip_counts_.push_back(static_cast<std::uint32_t>(flips.size()));
  waiting_times_.push_back(waiting_time);
  wall_times_.push_back(wall_time);
  ++sample_count_;
  if (is_checkpoint(sample_count_)) checkpoints_.push_back(next);
}

void ChainTrace::close(double epsilon, std::size_t flips, double waiting_time, double wall_time) {
  epsilons_.push_back(epsilon);
  flip_counts_.push_back(static_cast<std::uint32_t>(flips));
  waiting_times_.push_back(waiting_time);
  wall_times_.push_back(wall_time);
}

void ChainTrace::accumulate(const BinaryModel& current, double weight) {
  simd::active_kernels().accumulate_bits(accumulator_.data(), current.data(), weight,
                                         accumulator_.size());
  accumulated_weight_ += weight;
  ++accumulated_samples_;
}

const BinaryModel& ChainTrace::checkpoint(std::size_t s) const {
  if (!is_checkpoint(s) || s > sample_count_) throw Error("sample is not a checkpoint");
  return checkpoints_[(s - 1) / checkpoint_interval_];
}

std::span<const std::uint32_t> ChainTrace::flips_after(std::size_t s) const {
  if (s == 0 || s >= sample_count_) throw Error("no transition recorded after sample " + std::to_string(s));
  const auto begin = delta_offsets_[s - 1];
  const auto end = delta_offsets_[s];
  return {delta_indices_.data() + begin, end - begin};
}

BinaryModel ChainTrace::reconstruct(std::size_t s) const {
  if (s == 0 || s > sample_count_)
    throw Error("sample " + std::to_string(s) + " out of range [1, " + std::to_string(sample_count_) + "]");
  const std::size_t base = ((s - 1) / checkpoint_interval_) * checkpoint_interval_ + 1;
  BinaryModel m = checkpoints_[(base - 1) / checkpoint_interval_];
  for (std::size_t t = base; t < s; ++t) m.flip_all(flips_after(t));
  return m;
}

}  // namespace mjmcmc
