#include <doctest.h>

#include <atomic>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mjmcmc/binary_model.hpp"
#include "mjmcmc/counter_rng.hpp"
#include "mjmcmc/error.hpp"
#include "mjmcmc/executor.hpp"
#include "mjmcmc/models/factorizable.hpp"
#include "mjmcmc/models/table.hpp"
#include "mjmcmc/rates.hpp"
#include "mjmcmc/schedule.hpp"
#include "mjmcmc/trace.hpp"
#include "fixtures.hpp"

using namespace mjmcmc;

TEST_CASE("binary model index round trip and flips") {
  for (std::uint64_t idx : {0ull, 1ull, 5ull, 63ull, 42ull}) {
    const auto m = BinaryModel::from_index(idx, 6);
    CHECK(m.to_index() == idx);
    CHECK(m.count() == static_cast<std::size_t>(std::popcount(idx)));
  }
  BinaryModel m(4);
  const std::vector<std::uint32_t> flips{0, 2};
  m.flip_all(flips);
  CHECK(m.to_string() == "1010");
  CHECK(m.flipped(1).to_string() == "1110");
  CHECK(hamming(m, BinaryModel(4)) == 2);
  CHECK(difference(m, BinaryModel(4)) == flips);
  CHECK_THROWS_AS(BinaryModel::from_index(0, 64), CapacityError);
}

TEST_CASE("philox known answers") {
  using A4 = std::array<std::uint32_t, 4>;
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("counter rng is addressable and roughly uniform") {
  const CounterRng rng(99);
  CHECK(rng.uniform(Stream::Flip, 3, 4) == rng.uniform(Stream::Flip, 3, 4));
  CHECK(rng.uniform(Stream::Flip, 3, 4) != rng.uniform(Stream::Auxiliary, 3, 4));
  CHECK(rng.uniform(Stream::Flip, 3, 4) != rng.uniform(Stream::Flip, 4, 4));
  CHECK(CounterRng(1).uniform(Stream::Flip, 0, 0) != CounterRng(2).uniform(Stream::Flip, 0, 0));

  const std::size_t n = 200000;
  double sum = 0.0, sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform(Stream::Flip, i / 100, i % 100);
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    REQUIRE(rng.uniform_positive(Stream::Flip, i / 100, i % 100) > 0.0);
    sum += u;
    sq += u * u;
  }
  // Mean 1/2 with sd sqrt(1/12n); variance 1/12.
  CHECK(std::abs(sum / n - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / n));
  CHECK(std::abs(sq / n - (sum / n) * (sum / n) - 1.0 / 12.0) < 2e-3);
}

TEST_CASE("epsilon schedules") {
  const auto c = EpsilonSchedule::constant(0.3);
  CHECK(c.at(1) == 0.3);
  CHECK(c.at(1000000) == 0.3);
  CHECK(c.homogeneous());

  const auto slow = EpsilonSchedule::slow_decay(0.3);
  CHECK(slow.at(1) == doctest::Approx(0.3));  // log10(10) = 1
  CHECK(slow.at(91) == doctest::Approx(0.15));
  CHECK_FALSE(slow.homogeneous());

  const auto fast = EpsilonSchedule::fast_decay(0.3);
  CHECK(fast.at(1) == doctest::Approx(0.3));
  CHECK(fast.at(3) == doctest::Approx(0.3 * std::pow(1.0 / 6.0, 0.4)));

  // Both decaying schedules are non-increasing and divergent in sum (spot check growth).
  double s_slow = 0.0, s_fast = 0.0;
  for (std::size_t s = 1; s <= 100000; ++s) {
    if (s > 1) {
      REQUIRE(slow.at(s) <= slow.at(s - 1));
      REQUIRE(fast.at(s) <= fast.at(s - 1));
    }
    s_slow += slow.at(s);
    s_fast += fast.at(s);
  }
  CHECK(s_slow > 5000.0);
  CHECK(s_fast > 20.0);

  const auto t = EpsilonSchedule::table({0.5, 0.25});
  CHECK(t.at(2) == 0.25);
  CHECK_THROWS_AS(t.at(3), ScheduleExhausted);
  try {
    t.at(3);
  } catch (const ScheduleExhausted& e) {
    CHECK(e.iteration() == 3);
  }

  CHECK_THROWS_AS(EpsilonSchedule::constant(1.5), ConfigError);
  CHECK_THROWS_AS(EpsilonSchedule::constant(0.0), ConfigError);
  CHECK_THROWS_AS(EpsilonSchedule::table({0.5, 1.0}), ConfigError);
  CHECK(parse_schedule("slow:0.3").at(91) == doctest::Approx(0.15));
  CHECK(parse_schedule("constant:0.3").describe() == "constant:0.29999999999999999");
  CHECK_THROWS_AS(parse_schedule("linear:0.3"), ConfigError);
  CHECK_THROWS_AS(parse_schedule("constant:abc"), ConfigError);
  CHECK_THROWS_AS(parse_schedule("constant:1.5"), ConfigError);
}

TEST_CASE("executor covers the range and reports the lowest failing block") {
  for (std::size_t threads : {1, 2, 3, 8}) {
    const Executor ex(threads);
    std::vector<int> hits(1000, 0);
    ex.parallel_for(hits.size(), [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) ++hits[i];
    }, 16);
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));

    try {
      ex.parallel_for(1000, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
          if (i == 500 || i == 900) throw std::runtime_error(std::to_string(i));
      }, 16);
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "500");
    }
  }
  CHECK(Executor(0).threads() >= 1);
}

TEST_CASE("rates follow min(1, ratio) with flooring") {
  CHECK(rate_from_log_ratio(2.0, 1e-12) == 1.0);
  CHECK(rate_from_log_ratio(0.0, 1e-12) == 1.0);
  CHECK(rate_from_log_ratio(std::log(0.25), 1e-12) == doctest::Approx(0.25));
  CHECK(rate_from_log_ratio(-1000.0, 1e-12) == 1e-12);

  const models::FactorizableModel f({0.9, 0.5, 0.1});
  const auto r = compute_rates(f, BinaryModel(3));
  // Adding element i multiplies the posterior by p_i / (1 - p_i).
  CHECK(r.rates[0] == 1.0);
  CHECK(r.rates[1] == doctest::Approx(1.0));
  CHECK(r.rates[2] == doctest::Approx(0.1 / 0.9));
  CHECK(r.total() == doctest::Approx(2.0 + 1.0 / 9.0));
  CHECK(r.state_id == state_fingerprint(BinaryModel(3)));
  CHECK(state_fingerprint(BinaryModel(3)) != state_fingerprint(BinaryModel::from_index(1, 3)));
}

TEST_CASE("rate evaluation failures carry the element index") {
  const test::NanAt model(5, 3);
  try {
    compute_rates(model, BinaryModel(5));
    FAIL("expected ModelEvaluationError");
  } catch (const ModelEvaluationError& e) {
    CHECK(e.index() == 3);
    CHECK(e.iteration() == ModelEvaluationError::kNoIteration);
    CHECK(e.at_iteration(7).iteration() == 7);
  }
}

TEST_CASE("incremental rate updates equal a full recomputation") {
  // Property: for random flip sets on a model with sparse dependents.
  const auto ggm = test::small_ggm(7, 40, 3);
  const CounterRng rng(5);
  BinaryModel m(ggm.size());
  RateVector rates = compute_rates(ggm, m);
  for (std::uint64_t it = 0; it < 60; ++it) {
    std::vector<std::uint32_t> flips;
    for (std::uint32_t i = 0; i < ggm.size(); ++i)
      if (rng.uniform(Stream::Flip, it, i) < (it % 3 == 0 ? 0.3 : 0.05)) flips.push_back(i);
    m.flip_all(flips);
    update_rates(ggm, m, flips, rates, Executor(2));
    const RateVector full = compute_rates(ggm, m);
    REQUIRE(rates.rates == full.rates);
    REQUIRE(rates.state_id == full.state_id);
  }
}

TEST_CASE("parallel rate evaluation matches serial bit for bit") {
  const auto ggm = test::small_ggm(10, 60, 8);
  const BinaryModel m = BinaryModel::from_index(0x2A5F1, ggm.size());
  CHECK(compute_rates(ggm, m, Executor(1)).rates == compute_rates(ggm, m, Executor(4)).rates);
}

TEST_CASE("trace stores deltas, checkpoints and reconstructs states") {
  const CounterRng rng(3);
  BinaryModel m(9);
  ChainTrace trace(m, 3, 4);
  std::vector<BinaryModel> states{m};
  for (std::uint64_t s = 1; s < 20; ++s) {
    std::vector<std::uint32_t> flips;
    for (std::uint32_t i = 0; i < 9; ++i)
      if (rng.uniform(Stream::Flip, s, i) < 0.3) flips.push_back(i);
    m.flip_all(flips);
    trace.record_transition(flips, m, 0.3, 1.0, 0.0);
    states.push_back(m);
  }
  trace.close(0.3, 0, 1.0, 0.0);
  REQUIRE(trace.size() == states.size());
  for (std::size_t s = 1; s <= states.size(); ++s) CHECK(trace.reconstruct(s) == states[s - 1]);
  CHECK(trace.is_checkpoint(1));
  CHECK(trace.is_checkpoint(5));
  CHECK_FALSE(trace.is_checkpoint(6));
  CHECK(trace.checkpoint(9) == states[8]);
  CHECK(difference(states[4], states[5]) ==
        std::vector<std::uint32_t>(trace.flips_after(5).begin(), trace.flips_after(5).end()));
  CHECK(trace.epsilons().size() == states.size());
  CHECK_THROWS(trace.reconstruct(0));
  CHECK_THROWS(trace.reconstruct(states.size() + 1));
}

TEST_CASE("trace accumulator weights samples") {
  ChainTrace trace(BinaryModel(3), 1);
  trace.accumulate(BinaryModel::from_index(0b101, 3), 2.0);
  trace.accumulate(BinaryModel::from_index(0b001, 3), 1.0);
  CHECK(trace.inclusion_accumulator() == std::vector<double>{3.0, 0.0, 2.0});
  CHECK(trace.accumulated_weight() == 3.0);
  CHECK(trace.accumulated_samples() == 2);
}
