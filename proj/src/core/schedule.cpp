#include "mjmcmc/schedule.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "mjmcmc/error.hpp"

namespace mjmcmc {

namespace {

void require_open_unit(double value, const std::string& what) {
  if (!(value > 0.0 && value < 1.0))
    throw ConfigError(what + " must lie in the open interval (0,1), got " + std::to_string(value));
}

}  // namespace

EpsilonSchedule EpsilonSchedule::constant(double base) {
  require_open_unit(base, "epsilon");
  return {ScheduleKind::Constant, base};
}

EpsilonSchedule EpsilonSchedule::slow_decay(double base) {
  require_open_unit(base, "epsilon");
  return {ScheduleKind::SlowDecay, base};
}

EpsilonSchedule EpsilonSchedule::fast_decay(double base) {
  require_open_unit(base, "epsilon");
  return {ScheduleKind::FastDecay, base};
}

EpsilonSchedule EpsilonSchedule::table(std::vector<double> values) {
  if (values.empty()) throw ConfigError("epsilon table is empty");
  for (std::size_t i = 0; i < values.size(); ++i)
    require_open_unit(values[i], "epsilon table entry " + std::to_string(i + 1));
  EpsilonSchedule s(ScheduleKind::Table, values.front());
  s.table_ = std::make_shared<const std::vector<double>>(std::move(values));
  return s;
}

const std::vector<double>& EpsilonSchedule::values() const noexcept {
  static const std::vector<double> empty;
  return table_ ? *table_ : empty;
}

double EpsilonSchedule::at(std::size_t s) const {
  if (s == 0) throw Error("epsilon schedule is indexed from s = 1");
  const double sd = static_cast<double>(s);
  switch (kind_) {
    case ScheduleKind::Constant:
      return base_;
    case ScheduleKind::SlowDecay:
      return base_ / std::log10(sd + 9.0);
    case ScheduleKind::FastDecay:
      return base_ * std::pow(1.0 / (sd * std::log2(sd + 1.0)), 0.4);
    case ScheduleKind::Table:
      if (s > table_->size()) throw ScheduleExhausted(s, table_->size());
      return (*table_)[s - 1];
  }
  return base_;
}

std::string EpsilonSchedule::describe() const {
  char buf[64];
  switch (kind_) {
    case ScheduleKind::Constant:
      std::snprintf(buf, sizeof buf, "constant:%.17g", base_);
      break;
    case ScheduleKind::SlowDecay:
      std::snprintf(buf, sizeof buf, "slow:%.17g", base_);
      break;
    case ScheduleKind::FastDecay:
      std::snprintf(buf, sizeof buf, "fast:%.17g", base_);
      break;
    case ScheduleKind::Table:
      std::snprintf(buf, sizeof buf, "table:<%zu entries>", table_->size());
      break;
  }
  return buf;
}

EpsilonSchedule parse_schedule(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw ConfigError("schedule spec '" + spec + "' must look like kind:value");
  const std::string kind = spec.substr(0, colon);
  const std::string value = spec.substr(colon + 1);
  if (kind == "table") throw ConfigError("table schedules must be loaded through the io layer");
  char* end = nullptr;
  const double base = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size())
    throw ConfigError("schedule value '" + value + "' is not a number");
  if (kind == "constant") return EpsilonSchedule::constant(base);
  if (kind == "slow") return EpsilonSchedule::slow_decay(base);
  if (kind == "fast") return EpsilonSchedule::fast_decay(base);
  throw ConfigError("unknown schedule kind '" + kind + "' (expected constant, slow, fast or table)");
}

}  // namespace mjmcmc
