#include <doctest.h>

#include <cmath>
#include <vector>

#include "fixtures.hpp"
#include "mjmcmc/error.hpp"
#include "mjmcmc/harness/benchmark.hpp"
#include "mjmcmc/harness/metrics.hpp"
#include "mjmcmc/harness/synthetic.hpp"
#include "mjmcmc/models/factorizable.hpp"
#include "mjmcmc/models/ggm.hpp"
#include "mjmcmc/samplers.hpp"

using namespace mjmcmc;
using namespace mjmcmc::harness;

using Truth = std::vector<std::uint8_t>;

TEST_CASE("auc_pr worked values") {
  CHECK(auc_pr(std::vector<double>{0.9, 0.8, 0.2, 0.1}, Truth{1, 1, 0, 0}) == doctest::Approx(1.0));
  // All scores tied: a single threshold, precision equals the positive rate.
  CHECK(auc_pr(std::vector<double>{0.5, 0.5, 0.5, 0.5, 0.5}, Truth{1, 0, 0, 1, 0}) == doctest::Approx(0.4));
  // Hits at ranks 1 and 3: (1 + 2/3) / 2.
  CHECK(auc_pr(std::vector<double>{0.9, 0.8, 0.4, 0.1}, Truth{1, 0, 1, 0}) == doctest::Approx(5.0 / 6.0));
  CHECK_THROWS_AS(auc_pr(std::vector<double>{0.1, 0.2}, Truth{0, 0}), Error);
}

TEST_CASE("auc_roc worked values and symmetry") {
  CHECK(auc_roc(std::vector<double>{0.9, 0.8, 0.2, 0.1}, Truth{1, 1, 0, 0}) == doctest::Approx(1.0));
  CHECK(auc_roc(std::vector<double>{0.9, 0.8, 0.2, 0.1}, Truth{0, 0, 1, 1}) == doctest::Approx(0.0));
  CHECK(auc_roc(std::vector<double>{0.5, 0.5, 0.5, 0.5}, Truth{0, 1, 0, 1}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(auc_roc(std::vector<double>{0.1, 0.2}, Truth{1, 1}), Error);

  DrawSource d(11, 1);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> s(40), neg(40), mono(40);
    Truth t(40);
    for (std::size_t i = 0; i < s.size(); ++i) {
      s[i] = d.uniform();
      neg[i] = -s[i];
      mono[i] = std::exp(3.0 * s[i]) - 7.0;
      t[i] = d.uniform() < 0.3 ? 1 : 0;
    }
    t[0] = 1;
    t[1] = 0;
    CHECK(auc_roc(s, t) + auc_roc(neg, t) == doctest::Approx(1.0));
    CHECK(auc_roc(mono, t) == doctest::Approx(auc_roc(s, t)).epsilon(1e-15));
    CHECK(auc_pr(mono, t) == doctest::Approx(auc_pr(s, t)).epsilon(1e-15));
  }
}

TEST_CASE("p plus and p minus are class-conditional means") {
  const auto pm = p_plus_minus(std::vector<double>{0.9, 0.4, 0.6, 0.5}, Truth{1, 1, 0, 0});
  CHECK(pm.p_plus == doctest::Approx(0.65));
  CHECK(pm.p_minus == doctest::Approx(0.55));
  const auto m = evaluate(std::vector<double>{0.9, 0.4, 0.6, 0.3}, Truth{1, 1, 0, 0});
  CHECK(m.p_plus == doctest::Approx(0.65));
  CHECK(m.p_minus == doctest::Approx(0.45));
  CHECK(m.auc_roc == doctest::Approx(0.75));
}

TEST_CASE("mean and standard error") {
  const auto one = mean_and_se(std::vector<double>{2.0});
  CHECK(one.mean == 2.0);
  CHECK(one.se == 0.0);
  const auto ms = mean_and_se(std::vector<double>{1.0, 2.0, 3.0, 4.0});
  CHECK(ms.mean == doctest::Approx(2.5));
  CHECK(ms.se == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
}

TEST_CASE("GGM generator support follows alpha") {
  for (double alpha : {0.0, 1.0}) {
    const auto inst = generate_ggm_instance(8, 50, alpha, 2);
    const models::EdgeIndex ei(8);
    CHECK(inst.true_graph.count() == (alpha == 0.0 ? 0u : ei.edges()));
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = i + 1; j < 8; ++j)
        CHECK((inst.precision(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) != 0.0) ==
              inst.true_graph[ei.edge(i, j)]);
  }
  CHECK_THROWS(generate_ggm_instance(8, 50, 1.5, 2));

  // Off-diagonal zeros of K* match the non-edges and K* is positive definite.
  const auto inst = generate_ggm_instance(20, 30, 0.1, 4);
  const models::EdgeIndex ei(20);
  for (std::size_t e = 0; e < ei.edges(); ++e) {
    const auto [i, j] = ei.endpoints(e);
    CHECK((inst.precision(i, j) == 0.0) == !inst.true_graph[e]);
    CHECK(inst.precision(i, j) == inst.precision(j, i));
  }
  CHECK(inst.precision.llt().info() == Eigen::Success);
  CHECK(inst.data.rows() == 30);
  CHECK(inst.truth().size() == ei.edges());

  double edges = 0.0;
  const int reps = 10;
  for (int s = 0; s < reps; ++s) edges += static_cast<double>(generate_ggm_instance(20, 5, 0.1, 100 + s).true_graph.count());
  const double sd = std::sqrt(reps * 190 * 0.1 * 0.9);
  CHECK(std::abs(edges - reps * 19.0) < 3.0 * sd);
}

TEST_CASE("empty-graph data are uncorrelated") {
  const auto inst = generate_ggm_instance(6, 4000, 0.0, 7);
  Eigen::MatrixXd c = inst.data.rowwise() - inst.data.colwise().mean();
  const Eigen::MatrixXd cov = c.transpose() * c / 3999.0;
  for (Eigen::Index i = 0; i < 6; ++i)
    for (Eigen::Index j = i + 1; j < 6; ++j)
      CHECK(std::abs(cov(i, j) / std::sqrt(cov(i, i) * cov(j, j))) < 0.08);
}

TEST_CASE("generators are deterministic in the seed") {
  const auto a = generate_bvs_instance(30, 8, 3, 1.0, 5), b = generate_bvs_instance(30, 8, 3, 1.0, 5);
  CHECK(a.design == b.design);
  CHECK(a.response == b.response);
  CHECK(std::count(a.active.begin(), a.active.end(), 1) == 3);
  for (Eigen::Index i = 0; i < 8; ++i)
    if (a.active[static_cast<std::size_t>(i)]) CHECK(std::abs(a.coefficients[i]) >= 1.0);
    else CHECK(a.coefficients[i] == 0.0);
  const auto g = generate_ising_chain(5, 40, 0.5, 1);
  CHECK(g.true_graph.count() == 4);
  CHECK(((g.data.array() == 0.0) || (g.data.array() == 1.0)).all());
}

TEST_CASE("one-iteration budgets agree across samplers") {
  const auto inst = generate_ggm_instance(6, 60, 0.3, 1);
  const models::GgmModel model(inst.data, {0.3, 1000});
  const auto truth = inst.truth();
  BinaryModel start(model.size());
  start.set(0, true);
  start.set(3, true);
  std::vector<SamplerConfig> configs = {
      {"bd", SamplerKind::BirthDeath, EpsilonSchedule::constant(0.3), 1, std::nullopt, 1},
      {"mj", SamplerKind::MultipleJump, EpsilonSchedule::constant(0.3), 1, std::nullopt, 2},
      {"mh", SamplerKind::MhCorrected, EpsilonSchedule::constant(0.5), 1, std::nullopt, 3},
  };
  const auto reports = run_benchmark(model, truth, start, configs);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) {
    CHECK(r.inclusion == reports[0].inclusion);
    CHECK(r.final.auc_pr == reports[0].final.auc_pr);
    CHECK(r.final.auc_roc == reports[0].final.auc_roc);
    CHECK(r.final.p_minus == reports[0].final.p_minus);
  }
  CHECK(reports[0].inclusion[0] == 1.0);
  CHECK(reports[0].inclusion[1] == 0.0);
}

TEST_CASE("benchmark series are ordered and end at the final sample") {
  const auto inst = generate_ggm_instance(8, 80, 0.3, 2);
  const models::GgmModel model(inst.data, {0.3, 10000});
  std::vector<SamplerConfig> configs = {
      {"mj", SamplerKind::MultipleJump, EpsilonSchedule::constant(0.3), 400, std::nullopt, 1},
      {"bd", SamplerKind::BirthDeath, EpsilonSchedule::constant(0.3), 400, std::nullopt, 1},
  };
  const auto reports = run_benchmark(model, inst.truth(), BinaryModel(model.size()), configs, {1e9, 1.5, 50}, 2);
  for (const auto& r : reports) {
    CAPTURE(r.name);
    REQUIRE(!r.series.empty());
    for (std::size_t i = 1; i < r.series.size(); ++i) {
      CHECK(r.series[i].iteration > r.series[i - 1].iteration);
      CHECK(r.series[i].wall_time >= r.series[i - 1].wall_time);
    }
    CHECK(r.series.back().metrics.auc_pr == r.final.auc_pr);
    CHECK(r.series.back().iteration == r.iterations);
    const auto hit = iterations_to_threshold(r, r.final.auc_pr);
    REQUIRE(hit.has_value());
    CHECK(*hit <= r.iterations);
    CHECK_FALSE(iterations_to_threshold(r, 1.5).has_value());
  }
}

TEST_CASE("inclusion from a trace") {
  ChainTrace empty(BinaryModel(3), 1);
  CHECK_THROWS(inclusion_probabilities(empty));
  const models::FactorizableModel f({0.5, 0.5, 0.5});
  MjOptions opts;
  opts.iterations = 10;
  opts.burn_in = 0.0;
  // A vanishing eps never moves, so every sample is the start.
  const auto trace = run_mj_mcmc(f, BinaryModel::from_index(0b101, 3), EpsilonSchedule::constant(1e-300), opts);
  CHECK(inclusion_probabilities(trace) == std::vector<double>{1.0, 0.0, 1.0});
}

TEST_CASE("small-eps multiple jump is indistinguishable from birth-death") {
  // Paired over 8 instances: MJ with eps = 0.001 against the continuous-time chain.
  std::vector<double> diff;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto inst = generate_ggm_instance(6, 60, 0.3, seed);
    const models::GgmModel model(inst.data, {0.3, 1000});
    std::vector<SamplerConfig> configs = {
        {"bd", SamplerKind::BirthDeath, EpsilonSchedule::constant(0.3), 20000, std::nullopt, seed},
        {"mj", SamplerKind::MultipleJump, EpsilonSchedule::constant(0.001), 2000000, std::nullopt, seed},
    };
    const auto r = run_benchmark(model, inst.truth(), BinaryModel(model.size()), configs, {1e9, 2.0, 0});
    diff.push_back(r[1].final.auc_pr - r[0].final.auc_pr);
  }
  const auto ms = mean_and_se(diff);
  CAPTURE(ms.mean);
  CAPTURE(ms.se);
  CHECK(std::abs(ms.mean) <= std::max(3.0 * ms.se, 0.01));
}
