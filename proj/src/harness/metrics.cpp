#include "mjmcmc/harness/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mjmcmc/error.hpp"

namespace mjmcmc::harness {
namespace {

void check_lengths(std::span<const double> scores, std::span<const std::uint8_t> truth) {
  if (scores.size() != truth.size())
    throw Error("scores and truth differ in length (" + std::to_string(scores.size()) + " vs " +
                std::to_string(truth.size()) + ")");
}

std::pair<std::size_t, std::size_t> class_counts(std::span<const std::uint8_t> truth) {
  std::size_t pos = 0;
  for (auto t : truth) pos += t ? 1 : 0;
  return {pos, truth.size() - pos};
}

void require_both_classes(std::span<const std::uint8_t> truth) {
  const auto [pos, neg] = class_counts(truth);
  if (pos == 0 || neg == 0) throw Error("truth labels contain a single class");
}

}  // namespace

double auc_pr(std::span<const double> scores, std::span<const std::uint8_t> truth) {
  check_lengths(scores, truth);
  const std::size_t positives = class_counts(truth).first;
  if (positives == 0) throw Error("auc_pr: truth has no positives");

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  double area = 0.0, prev_recall = 0.0;
  std::size_t tp = 0, seen = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) {
      tp += truth[order[j]] ? 1 : 0;
      ++j;
    }
    seen = j;
    const double recall = static_cast<double>(tp) / static_cast<double>(positives);
    const double precision = static_cast<double>(tp) / static_cast<double>(seen);
    area += (recall - prev_recall) * precision;
    prev_recall = recall;
    i = j;
  }
  return area;
}

double auc_roc(std::span<const double> scores, std::span<const std::uint8_t> truth) {
  check_lengths(scores, truth);
  require_both_classes(truth);
  const auto [pos, neg] = class_counts(truth);

  // Rank-sum form of U with midranks for ties.
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double rank_sum = 0.0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    const double midrank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t)
      if (truth[order[t]]) rank_sum += midrank;
    i = j;
  }
  const double p = static_cast<double>(pos), q = static_cast<double>(neg);
  const double u = rank_sum - p * (p + 1.0) / 2.0;
  return u / (p * q);
}

PlusMinus p_plus_minus(std::span<const double> scores, std::span<const std::uint8_t> truth) {
  check_lengths(scores, truth);
  require_both_classes(truth);
  double sp = 0.0, sn = 0.0;
  std::size_t np = 0, nn = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (truth[i]) {
      sp += scores[i];
      ++np;
    } else {
      sn += scores[i];
      ++nn;
    }
  }
  return {sp / static_cast<double>(np), sn / static_cast<double>(nn)};
}

std::vector<double> inclusion_probabilities(const ChainTrace& trace) {
  if (trace.accumulated_samples() == 0 || !(trace.accumulated_weight() > 0.0))
    throw Error("inclusion_probabilities: empty post-burn-in window");
  std::vector<double> out = trace.inclusion_accumulator();
  const double w = trace.accumulated_weight();
  for (double& v : out) v = std::clamp(v / w, 0.0, 1.0);
  return out;
}

Metrics evaluate(std::span<const double> scores, std::span<const std::uint8_t> truth) {
  const PlusMinus pm = p_plus_minus(scores, truth);
  return {auc_pr(scores, truth), auc_roc(scores, truth), pm.p_plus, pm.p_minus};
}

MeanSe mean_and_se(std::span<const double> values) {
  if (values.empty()) throw Error("mean_and_se of an empty set");
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() == 1) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

}  // namespace mjmcmc::harness
