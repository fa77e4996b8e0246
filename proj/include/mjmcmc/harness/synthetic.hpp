#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mjmcmc/binary_model.hpp"

namespace mjmcmc::harness {

/// Seeded Gaussian / uniform draws on top of the counter-based generator.
class DrawSource {
 public:
  DrawSource(std::uint64_t seed, std::uint64_t domain);
  double uniform();
  double normal();

 private:
  std::uint64_t seed_;
  std::uint64_t domain_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct SyntheticGgmInstance {
  std::size_t p = 0;
  std::size_t n = 0;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  /// True graph G* over edges in EdgeIndex order.
  BinaryModel true_graph;
  /// K*, zero off the support of G*.
  Eigen::MatrixXd precision;
  /// n x p rows drawn from Normal(0, K*^-1).
  Eigen::MatrixXd data;

  std::vector<std::uint8_t> truth() const;
};

/// Random graph with independent Bernoulli(alpha) edges. K* = mask(A A^T) + c I
/// with A a p x 3 standard normal matrix; the loading c doubles until K* is
/// positive definite with condition number below 1e6. Throws Error when the
/// retry budget runs out.
SyntheticGgmInstance generate_ggm_instance(std::size_t p, std::size_t n, double alpha,
                                           std::uint64_t seed);

struct SyntheticBvsInstance {
  Eigen::VectorXd response;
  Eigen::MatrixXd design;
  Eigen::VectorXd coefficients;
  std::vector<std::uint8_t> active;
};

/// Standard normal design, `active` randomly placed coefficients with
/// magnitude in [min_magnitude, min_magnitude + 1] and random sign, unit noise.
SyntheticBvsInstance generate_bvs_instance(std::size_t n, std::size_t k, std::size_t active,
                                           double min_magnitude, std::uint64_t seed);

struct SyntheticIsingInstance {
  std::size_t p = 0;
  /// Chain 0-1-2-...-(p-1) in EdgeIndex order.
  BinaryModel true_graph;
  /// n x p matrix of 0/1 values.
  Eigen::MatrixXd data;

  std::vector<std::uint8_t> truth() const;
};

/// Chain-structured Ising model with spins s in {-1, 1} and coupling J between
/// consecutive nodes, sampled by Gibbs sweeps (burn-in 200 sweeps, then one
/// observation every `thin` sweeps). Data are reported as (s + 1) / 2.
SyntheticIsingInstance generate_ising_chain(std::size_t p, std::size_t n, double coupling,
                                            std::uint64_t seed, std::size_t thin = 10);

}  // namespace mjmcmc::harness
