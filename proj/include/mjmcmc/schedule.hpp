#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace mjmcmc {

enum class ScheduleKind { Constant, SlowDecay, FastDecay, Table };

/// The sequence eps_1, eps_2, ... evaluated lazily by (1-based) iteration.
///
///   constant : eps_s = base
///   slow     : eps_s = base / log10(s + 9)
///   fast     : eps_s = base * (1 / (s * log2(s + 1)))^0.4
///   table    : eps_s = table[s - 1]
class EpsilonSchedule {
 public:
  static EpsilonSchedule constant(double base);
  static EpsilonSchedule slow_decay(double base);
  static EpsilonSchedule fast_decay(double base);
  static EpsilonSchedule table(std::vector<double> values);

  ScheduleKind kind() const noexcept { return kind_; }
  double base() const noexcept { return base_; }
  const std::vector<double>& values() const noexcept;

  /// eps_s for s >= 1. Throws ScheduleExhausted for a table shorter than s.
  double at(std::size_t s) const;

  bool homogeneous() const noexcept { return kind_ == ScheduleKind::Constant; }

  /// `constant:0.3`, `slow:0.3`, `fast:0.3` or `table:<n entries>`.
  std::string describe() const;

 private:
  EpsilonSchedule(ScheduleKind kind, double base) : kind_(kind), base_(base) {}

  ScheduleKind kind_;
  double base_;
  std::shared_ptr<const std::vector<double>> table_;
};

/// Parses `constant:x`, `slow:x`, `fast:x`. Table specs need file access and are
/// handled by io::parse_schedule_spec.
EpsilonSchedule parse_schedule(const std::string& spec);

}  // namespace mjmcmc
