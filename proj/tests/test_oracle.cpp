#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <sstream>
#include <vector>

#include "dams/operators.hpp"
#include "dams/oracle.hpp"
#include "dams/problem.hpp"
#include "dams/strategy.hpp"
#include "oracle_ref.hpp"

using namespace dams;

TEST_CASE("exact-b gain distribution examples") {
  // from all zeros, flipping 5 bits always gains 5
  const GainDistribution d0 = gain_distribution_exact_b(0, 5, 10000);
  REQUIRE(d0.support.size() == 1);
  CHECK(d0.support[0].first == 5);
  CHECK(d0.support[0].second == doctest::Approx(1.0).epsilon(1e-12));

  // at the optimum, a 1-bit flip always loses 1
  const GainDistribution d1 = gain_distribution_exact_b(10000, 1, 10000);
  REQUIRE(d1.support.size() == 1);
  CHECK(d1.support[0].first == -1);

  // half ones: +-1 with equal probability
  const GainDistribution d2 = gain_distribution_exact_b(5, 1, 10);
  REQUIRE(d2.support.size() == 2);
  CHECK(d2.support[0].first == -1);
  CHECK(d2.support[0].second == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(d2.support[1].first == 1);
  CHECK(d2.support[1].second == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(gain_distribution_exact_b(-1, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(gain_distribution_exact_b(0, 11, 10), std::invalid_argument);
}

TEST_CASE("exact-b distribution: normalization, mean and brute force") {
  for (int l : {6, 11, 20}) {
    for (int b : {1, 3, 5}) {
      if (b > l) {
        continue;
      }
      for (int f = 0; f <= l; ++f) {
        const GainDistribution dist = gain_distribution_exact_b(f, b, l);
        CHECK(std::abs(dist.total_probability() - 1.0) <= 1e-12);
        const double analytic_mean = static_cast<double>(b) * (l - 2.0 * f) / l;
        CHECK(std::abs(dist.mean() - analytic_mean) <= 1e-12);
        for (const auto& [gain, p] : dist.support) {
          CHECK(gain >= -b);
          CHECK(gain <= b);
        }

        const auto ref = oracle_ref::exact_b_pmf(f, b, l);
        REQUIRE(dist.support.size() == ref.size());
        for (const auto& [gain, p] : dist.support) {
          REQUIRE(ref.count(gain) == 1);
          CHECK(std::abs(p - ref.at(gain)) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("rate-flip distribution: normalization and footnote tail") {
  const int l = 10000;
  const GainDistribution at0 = gain_distribution_rate(0, l);
  CHECK(std::abs(at0.total_probability() - 1.0) <= 1e-12);
  CHECK(std::abs(at0.mean() - 1.0) <= 1e-9);

  // P(gain > 5) from all zeros = 1 - alpha
  const double alpha = prob_at_most_five_flips(l);
  CHECK(std::abs(at0.prob_greater_than(5) - (1.0 - alpha)) <= 1e-12);

  for (int f : {0, 137, 5000, 9999, 10000}) {
    const GainDistribution dist = gain_distribution_rate(f, l);
    CHECK(std::abs(dist.total_probability() - 1.0) <= 1e-12);
  }

  // small l: the truncated mixture matches full 2^l enumeration
  for (int l_small : {9, 14}) {
    for (int f = 0; f <= l_small; ++f) {
      const GainDistribution dist = gain_distribution_rate(f, l_small, l_small);
      const auto ref = oracle_ref::rate_pmf(f, l_small);
      for (const auto& [gain, p] : dist.support) {
        REQUIRE(ref.count(gain) == 1);
        CHECK(std::abs(p - ref.at(gain)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("expected_ea_gain examples and properties") {
  GainDistribution point5;
  point5.support = {{5, 1.0}};
  CHECK(expected_ea_gain(point5, 1) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(expected_ea_gain(point5, 50) == doctest::Approx(5.0).epsilon(1e-12));

  GainDistribution coin;
  coin.support = {{-1, 0.5}, {1, 0.5}};
  CHECK(expected_ea_gain(coin, 1) == doctest::Approx(0.5).epsilon(1e-12));

  const GainDistribution one_bit_at_zero = gain_distribution_exact_b(0, 1, 10000);
  CHECK(expected_ea_gain(one_bit_at_zero, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(expected_ea_gain(one_bit_at_zero, 7) == doctest::Approx(1.0).epsilon(1e-12));

  // non-decreasing in lambda
  const GainDistribution dist = gain_distribution_exact_b(4, 3, 12);
  double prev = 0.0;
  for (int lambda = 1; lambda <= 10; ++lambda) {
    const double e = expected_ea_gain(dist, lambda);
    CHECK(e >= prev - 1e-15);
    prev = e;
  }
  CHECK_THROWS_AS(expected_ea_gain(dist, 0), std::invalid_argument);
}

TEST_CASE("expected_ea_gain matches brute-force enumeration on small instances") {
  for (int l : {8, 14}) {
    for (int lambda : {1, 2, 3}) {
      for (int f = 0; f <= l; ++f) {
        for (int b : {1, 3, 5}) {
          const double expected =
              oracle_ref::expected_clipped_max(oracle_ref::exact_b_pmf(f, b, l), lambda);
          const double got = expected_ea_gain(gain_distribution_exact_b(f, b, l), lambda);
          CHECK(std::abs(got - expected) <= 1e-9);
        }
        const double expected_rate =
            oracle_ref::expected_clipped_max(oracle_ref::rate_pmf(f, l), lambda);
        const double got_rate = expected_ea_gain(gain_distribution_rate(f, l, l), lambda);
        CHECK(std::abs(got_rate - expected_rate) <= 1e-9);
      }
    }
  }
}

TEST_CASE("oracle table regimes at paper scale") {
  const OracleTable table = build_oracle_table(10000, 50);
  REQUIRE(table.ops.size() == 10001);

  // at the start the 5-bit operator is the selfish best
  CHECK(table.ops[0] == 2);
  // at the optimum every operator has expected gain 0: index-0 tie-break
  CHECK(table.ops[10000] == 0);

  // contiguous regime blocks in the order 5-bit, 3-bit, bit-flip, 1-bit
  std::vector<OperatorId> block_order;
  for (OperatorId op : table.ops) {
    if (block_order.empty() || block_order.back() != op) {
      block_order.push_back(op);
    }
  }
  CHECK(block_order == std::vector<OperatorId>{2, 1, 3, 0});
}

TEST_CASE("oracle table switch points at l=10000, lambda=50") {
  // switch fitnesses derived from the exact expected-gain argmax:
  // 5-bit [0, 7722], 3-bit [7723, 8736], bit-flip [8737, 8943], 1-bit above
  const OracleTable table = build_oracle_table(10000, 50);
  CHECK(table.ops[7722] == 2);
  CHECK(table.ops[7723] == 1);
  CHECK(table.ops[8736] == 1);
  CHECK(table.ops[8737] == 3);
  CHECK(table.ops[8943] == 3);
  CHECK(table.ops[8944] == 0);
  // the bit-flip regime sits close to the optimum
  CHECK(oracle_select(8800, table) == 3);
}

TEST_CASE("bit-flip window is confirmed by monte-carlo ea_step") {
  // inside [8737, 8943] the rate operator's expected one-iteration gain
  // exceeds every exact-b operator's; check the exact value against
  // simulation and the runner-up against the exact gap
  const int l = 10000;
  const Fitness f = 8800;
  const int lambda = 50;
  const double exact_rate = expected_ea_gain(gain_distribution_rate(f, l), lambda);
  const double exact_3bit = expected_ea_gain(gain_distribution_exact_b(f, 3, l), lambda);
  REQUIRE(exact_rate > exact_3bit);

  const OneMax problem(l);
  BitString parent(l);
  for (int i = 0; i < f; ++i) {
    parent.set(i, true);
  }
  Rng rng(424242);
  EaStepper stepper(problem);
  const int samples = 40000;
  double sum = 0.0;
  double sum_sq = 0.0;
  BitString x(l);
  for (int s = 0; s < samples; ++s) {
    x = parent;
    Fitness fx = f;
    const Reward r =
        stepper.step_in_place(x, fx, {OperatorDescriptor::Kind::RateFlip, 0}, lambda, rng);
    sum += r;
    sum_sq += static_cast<double>(r) * r;
  }
  const double mean = sum / samples;
  const double var = (sum_sq - samples * mean * mean) / (samples - 1);
  const double se = std::sqrt(var / samples);
  CHECK(std::abs(mean - exact_rate) <= 3.0 * se);
  CHECK(mean - 3.0 * se > exact_3bit);  // the window is not a numerical artifact
}

TEST_CASE("oracle table csv round trip") {
  const OracleTable table = build_oracle_table(60, 3);
  std::stringstream buffer;
  write_oracle_table_csv(table, buffer);
  const OracleTable back = read_oracle_table_csv(buffer);
  CHECK(back.length == table.length);
  CHECK(back.ops == table.ops);

  std::stringstream bad("nope\n");
  CHECK_THROWS(read_oracle_table_csv(bad));
}

TEST_CASE("network gain probability formula") {
  const int l = 10000;
  const double alpha = prob_at_most_five_flips(l);

  // single trial: 1 - alpha
  CHECK(prob_network_gain_exceeds_five(l, 1, 1) ==
        doctest::Approx(1.0 - alpha).epsilon(1e-12));

  // monotone in lambda * n, limit 1
  double prev = 0.0;
  for (int n : {1, 2, 4, 16, 64, 256, 100000}) {
    const double p = prob_network_gain_exceeds_five(l, 50, n);
    CHECK(p > prev);
    prev = p;
  }
  CHECK(prob_network_gain_exceeds_five(l, 50, 100000000) == doctest::Approx(1.0));

  CHECK_THROWS_AS(prob_network_gain_exceeds_five(0, 1, 1), std::invalid_argument);
}
