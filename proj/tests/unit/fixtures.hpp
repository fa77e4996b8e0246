#pragma once

// Shared fixtures for the unit tests.

#include <Eigen/Dense>

#include <cmath>
#include <limits>

#include "mjmcmc/harness/synthetic.hpp"
#include "mjmcmc/models/ggm.hpp"
#include "mjmcmc/posterior_model.hpp"

namespace test {

/// Returns NaN for one element, zero otherwise.
class NanAt final : public mjmcmc::PosteriorModel {
 public:
  NanAt(std::size_t k, std::size_t bad) : k_(k), bad_(bad) {}
  std::size_t size() const override { return k_; }
  double log_ratio(const mjmcmc::BinaryModel&, std::size_t i) const override {
    return i == bad_ ? std::numeric_limits<double>::quiet_NaN() : 0.0;
  }

 private:
  std::size_t k_, bad_;
};

/// Finite everywhere except when the state has at least `after` elements set.
class FailsWhenDense final : public mjmcmc::PosteriorModel {
 public:
  FailsWhenDense(std::size_t k, std::size_t after) : k_(k), after_(after) {}
  std::size_t size() const override { return k_; }
  double log_ratio(const mjmcmc::BinaryModel& m, std::size_t) const override {
    return m.count() >= after_ ? std::numeric_limits<double>::infinity() * 0.0 : 0.5;
  }

 private:
  std::size_t k_, after_;
};

inline mjmcmc::models::GgmModel small_ggm(std::size_t p, std::size_t n, std::uint64_t seed) {
  const auto inst = mjmcmc::harness::generate_ggm_instance(p, n, 0.3, seed);
  return mjmcmc::models::GgmModel(inst.data, {0.3, 10000});
}

}  // namespace test
