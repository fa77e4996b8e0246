#include "mjmcmc/rates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mjmcmc/error.hpp"

namespace mjmcmc {

namespace {

void evaluate_indices(const PosteriorModel& model, const BinaryModel& m,
                      std::span<const std::size_t> indices, RateVector& out,
                      const Executor& executor) {
  const double floor = model.rate_floor();
  executor.parallel_for(indices.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      const std::size_t i = indices[j];
      const double lr = model.log_ratio(m, i);
      if (!std::isfinite(lr)) throw ModelEvaluationError(i, "non-finite log ratio " + std::to_string(lr));
      out.log_rates[i] = std::min(0.0, lr);
      out.rates[i] = rate_from_log_ratio(lr, floor);
    }
  }, 16);
}

}  // namespace

double RateVector::total() const noexcept {
  double sum = 0.0;
  for (double q : rates) sum += q;
  return sum;
}

std::uint64_t state_fingerprint(const BinaryModel& m) noexcept {
  // FNV-1a over the bits, finalised with a splitmix64 round.
  std::uint64_t h = 0xcbf29ce484222325ull ^ m.size();
  for (auto b : m.bits()) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  return h ^ (h >> 31);
}

double rate_from_log_ratio(double log_ratio, double floor) noexcept {
  return std::max(floor, std::exp(std::min(0.0, log_ratio)));
}

RateVector compute_rates(const PosteriorModel& model, const BinaryModel& m,
                         const Executor& executor) {
  const std::size_t k = model.size();
  if (m.size() != k)
    throw Error("state length " + std::to_string(m.size()) + " does not match model size " +
                std::to_string(k));
  RateVector out;
  out.rates.assign(k, 0.0);
  out.log_rates.assign(k, 0.0);
  std::vector<std::size_t> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  evaluate_indices(model, m, all, out, executor);
  out.state_id = state_fingerprint(m);
  return out;
}

void update_rates(const PosteriorModel& model, const BinaryModel& m,
                  std::span<const std::uint32_t> flipped, RateVector& rates,
                  const Executor& executor) {
  if (flipped.empty()) return;
  const std::size_t k = model.size();
  std::vector<std::uint8_t> mark(k, 0);
  std::vector<std::size_t> affected;
  for (auto i : flipped) {
    auto deps = model.dependents(i);
    if (!deps) {
      rates = compute_rates(model, m, executor);
      return;
    }
    for (auto j : *deps)
      if (!mark[j]) {
        mark[j] = 1;
        affected.push_back(j);
      }
    if (affected.size() * 2 > k) {
      rates = compute_rates(model, m, executor);
      return;
    }
  }
  std::sort(affected.begin(), affected.end());
  evaluate_indices(model, m, affected, rates, executor);
  rates.state_id = state_fingerprint(m);
}

}  // namespace mjmcmc
