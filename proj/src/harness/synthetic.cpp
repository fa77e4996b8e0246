#include "mjmcmc/harness/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "mjmcmc/counter_rng.hpp"
#include "mjmcmc/error.hpp"
#include "mjmcmc/models/graph.hpp"

namespace mjmcmc::harness {

DrawSource::DrawSource(std::uint64_t seed, std::uint64_t domain) : seed_(seed), domain_(domain) {}

double DrawSource::uniform() {
  const CounterRng rng(seed_);
  return rng.uniform(Stream::Auxiliary, counter_++, domain_ << 40);
}

double DrawSource::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

std::vector<std::uint8_t> SyntheticGgmInstance::truth() const {
  return {true_graph.bits().begin(), true_graph.bits().end()};
}

std::vector<std::uint8_t> SyntheticIsingInstance::truth() const {
  return {true_graph.bits().begin(), true_graph.bits().end()};
}

SyntheticGgmInstance generate_ggm_instance(std::size_t p, std::size_t n, double alpha,
                                           std::uint64_t seed) {
  if (p < 2) throw ConfigError("synthetic GGM needs p >= 2");
  if (n < 2) throw ConfigError("synthetic GGM needs n >= 2");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("edge density must lie in [0,1]");

  SyntheticGgmInstance inst;
  inst.p = p;
  inst.n = n;
  inst.alpha = alpha;
  inst.seed = seed;

  const models::EdgeIndex edges(p);
  DrawSource graph_draws(seed, 1);
  inst.true_graph = BinaryModel(edges.edges());
  for (std::size_t e = 0; e < edges.edges(); ++e) inst.true_graph.set(e, graph_draws.uniform() < alpha);

  DrawSource weight_draws(seed, 2);
  Eigen::MatrixXd a(p, 3);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = weight_draws.normal();
  const Eigen::MatrixXd full = a * a.transpose();
  Eigen::MatrixXd masked = full.diagonal().asDiagonal();
  for (std::size_t e = 0; e < edges.edges(); ++e) {
    if (!inst.true_graph[e]) continue;
    const auto [i, j] = edges.endpoints(e);
    masked(i, j) = masked(j, i) = full(i, j);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(masked, Eigen::EigenvaluesOnly);
  double loading = std::max(0.0, -eig.eigenvalues().minCoeff()) + 0.5;
  bool ok = false;
  for (int attempt = 0; attempt < 30 && !ok; ++attempt, loading *= 2.0) {
    inst.precision = masked;
    inst.precision.diagonal().array() += loading;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> check(inst.precision, Eigen::EigenvaluesOnly);
    const double lo = check.eigenvalues().minCoeff();
    const double hi = check.eigenvalues().maxCoeff();
    ok = lo > 0.0 && hi / lo < 1e6;
  }
  if (!ok) throw Error("could not build a well-conditioned precision matrix");

  // y = z L^-T with K = L L^T has covariance K^-1.
  const Eigen::LLT<Eigen::MatrixXd> llt(inst.precision);
  DrawSource data_draws(seed, 3);
  Eigen::MatrixXd z(n, p);
  for (Eigen::Index r = 0; r < z.rows(); ++r)
    for (Eigen::Index c = 0; c < z.cols(); ++c) z(r, c) = data_draws.normal();
  // Solve L^T x = z^T column by column (rows of z are observations).
  inst.data = llt.matrixU().solve(z.transpose()).transpose();
  return inst;
}

SyntheticBvsInstance generate_bvs_instance(std::size_t n, std::size_t k, std::size_t active,
                                           double min_magnitude, std::uint64_t seed) {
  if (n < 2 || k < 1 || active > k) throw ConfigError("invalid synthetic regression dimensions");
  SyntheticBvsInstance inst;
  DrawSource draws(seed, 4);
  inst.design.resize(n, k);
  for (Eigen::Index r = 0; r < inst.design.rows(); ++r)
    for (Eigen::Index c = 0; c < inst.design.cols(); ++c) inst.design(r, c) = draws.normal();

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t j = 0; j + 1 < k; ++j) {
    const auto pick = j + std::min(k - j - 1, static_cast<std::size_t>(draws.uniform() * static_cast<double>(k - j)));
    std::swap(order[j], order[pick]);
  }
  inst.coefficients = Eigen::VectorXd::Zero(k);
  inst.active.assign(k, 0);
  for (std::size_t j = 0; j < active; ++j) {
    const double sign = draws.uniform() < 0.5 ? -1.0 : 1.0;
    inst.coefficients(order[j]) = sign * (min_magnitude + draws.uniform());
    inst.active[order[j]] = 1;
  }
  inst.response = inst.design * inst.coefficients;
  for (Eigen::Index r = 0; r < inst.response.size(); ++r) inst.response(r) += draws.normal();
  return inst;
}

SyntheticIsingInstance generate_ising_chain(std::size_t p, std::size_t n, double coupling,
                                            std::uint64_t seed, std::size_t thin) {
  if (p < 2 || n < 1 || thin < 1) throw ConfigError("invalid synthetic Ising dimensions");
  SyntheticIsingInstance inst;
  inst.p = p;
  const models::EdgeIndex edges(p);
  inst.true_graph = BinaryModel(edges.edges());
  for (std::size_t i = 0; i + 1 < p; ++i) inst.true_graph.set(edges.edge(i, i + 1), true);

  DrawSource draws(seed, 5);
  std::vector<int> s(p);
  for (auto& v : s) v = draws.uniform() < 0.5 ? -1 : 1;
  const auto sweep = [&] {
    for (std::size_t h = 0; h < p; ++h) {
      double field = 0.0;
      if (h > 0) field += s[h - 1];
      if (h + 1 < p) field += s[h + 1];
      const double prob_up = 1.0 / (1.0 + std::exp(-2.0 * coupling * field));
      s[h] = draws.uniform() < prob_up ? 1 : -1;
    }
  };
  for (int b = 0; b < 200; ++b) sweep();
  inst.data.resize(n, p);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t t = 0; t < thin; ++t) sweep();
    for (std::size_t h = 0; h < p; ++h) inst.data(r, h) = s[h] > 0 ? 1.0 : 0.0;
  }
  return inst;
}

}  // namespace mjmcmc::harness
