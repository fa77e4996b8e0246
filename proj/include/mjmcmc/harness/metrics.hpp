#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mjmcmc/trace.hpp"

namespace mjmcmc::harness {

/// Average precision: sum over distinct score thresholds (ties grouped) of
/// (recall gain) x precision. Throws Error when truth has no positives.
double auc_pr(std::span<const double> scores, std::span<const std::uint8_t> truth);

/// Normalised Mann-Whitney U, ties counted half. Throws Error for single-class truth.
double auc_roc(std::span<const double> scores, std::span<const std::uint8_t> truth);

struct PlusMinus {
  double p_plus = 0.0;   // mean score over positives
  double p_minus = 0.0;  // mean score over negatives
};

PlusMinus p_plus_minus(std::span<const double> scores, std::span<const std::uint8_t> truth);

/// Per-element weighted mean of the post-burn-in samples (unit weights for
/// discrete-time chains, holding times for birth-death runs).
std::vector<double> inclusion_probabilities(const ChainTrace& trace);

struct Metrics {
  double auc_pr = 0.0;
  double auc_roc = 0.0;
  double p_plus = 0.0;
  double p_minus = 0.0;
};

Metrics evaluate(std::span<const double> scores, std::span<const std::uint8_t> truth);

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;  // standard error of the mean, 0 for a single value
};

MeanSe mean_and_se(std::span<const double> values);

}  // namespace mjmcmc::harness
