#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "dams/operators.hpp"
#include "dams/oracle.hpp"
#include "dams/problem.hpp"

using namespace dams;

namespace {

BitString random_bits(int length, Rng& rng) {
  BitString x(length);
  for (int i = 0; i < length; ++i) {
    if (rng.below(2) == 1) {
      x.set(i, true);
    }
  }
  return x;
}

// Binomial(l, 1/l) CDF at 5 by long-double recurrence, independent of the
// library's log-space route.
long double binom_cdf5_ref(int l) {
  const long double p = 1.0L / l;
  const long double q = 1.0L - p;
  long double pmf = std::pow(q, static_cast<long double>(l));
  long double cdf = pmf;
  for (int i = 1; i <= 5 && i <= l; ++i) {
    pmf *= (p / q) * static_cast<long double>(l - i + 1) / static_cast<long double>(i);
    cdf += pmf;
  }
  return cdf;
}

}  // namespace

TEST_CASE("standard operator set ordering") {
  const auto ops = standard_operator_set();
  REQUIRE(ops.size() == 4);
  CHECK(ops[0].name() == "1-bit");
  CHECK(ops[1].name() == "3-bit");
  CHECK(ops[2].name() == "5-bit");
  CHECK(ops[3].name() == "bit-flip");
}

TEST_CASE("exact-b mutation flips exactly b bits") {
  Rng rng(1);
  CHECK(mutate_exact_b(BitString::parse("0000"), 4, rng).to_string() == "1111");
  CHECK_THROWS_AS(mutate_exact_b(BitString(4), 5, rng), std::invalid_argument);
  CHECK_THROWS_AS(mutate_exact_b(BitString(4), 0, rng), std::invalid_argument);

  for (int trial = 0; trial < 300; ++trial) {
    const int length = 8 + static_cast<int>(rng.below(120));
    const BitString parent = random_bits(length, rng);
    for (int b : {1, 3, 5}) {
      const BitString child = mutate_exact_b(parent, b, rng);
      CHECK(hamming_distance(parent, child) == b);
    }
  }

  // full scale: from all zeros, the 5-bit operator always gains exactly 5
  const OneMax problem(10000);
  const BitString zeros = problem.initial_solution();
  const BitString child = mutate_exact_b(zeros, 5, rng);
  CHECK(problem.evaluate(child) == 5);
  CHECK(zeros.count_ones() == 0);  // parent untouched
}

TEST_CASE("rate mutation matches the binomial law") {
  const int l = 10000;
  const BitString parent(l);
  Rng rng(2024);

  const int trials = 20000;
  int zero_flip = 0;
  int at_most_five = 0;
  double flip_sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    const BitString child = mutate_rate(parent, rng);
    const int flips = hamming_distance(parent, child);
    flip_sum += flips;
    zero_flip += flips == 0 ? 1 : 0;
    at_most_five += flips <= 5 ? 1 : 0;
  }

  // mean flips = l * (1/l) = 1, sd ~ 1
  CHECK(std::abs(flip_sum / trials - 1.0) <= 3.0 / std::sqrt(static_cast<double>(trials)));

  // P(no flip) = (1 - 1/l)^l
  const double p0 = std::exp(l * std::log1p(-1.0 / l));
  const double tol0 = 3.0 * std::sqrt(p0 * (1.0 - p0) / trials);
  CHECK(std::abs(static_cast<double>(zero_flip) / trials - p0) <= tol0);

  // P(at most 5 flips) = alpha from the six-term binomial sum
  const double alpha = static_cast<double>(binom_cdf5_ref(l));
  const double tol5 = 3.0 * std::sqrt(alpha * (1.0 - alpha) / trials);
  CHECK(std::abs(static_cast<double>(at_most_five) / trials - alpha) <= tol5);
}

TEST_CASE("ea_step examples") {
  Rng rng(3);
  const auto ops = standard_operator_set();

  // at the optimum no strict improvement exists
  const OneMax p4(4);
  BitString ones = BitString::parse("1111");
  for (const auto& op : ops) {
    if (op.kind == OperatorDescriptor::Kind::ExactBits && op.bits > 4) {
      continue;
    }
    const auto r = ea_step(p4, ones, op, 8, rng);
    CHECK(r.solution == ones);
    CHECK(r.reward == 0);
    CHECK(r.evaluations == 8);
  }

  // from all zeros the 5-bit operator always gains exactly 5
  const OneMax big(10000);
  for (int lambda : {1, 7, 50}) {
    const auto r = ea_step(big, big.initial_solution(), ops[2], lambda, rng);
    CHECK(r.reward == 5);
    CHECK(big.evaluate(r.solution) == 5);
    CHECK(r.evaluations == lambda);
  }

  // 1-bit from all zeros with lambda = 1 gains exactly 1
  const auto r1 = ea_step(big, big.initial_solution(), ops[0], 1, rng);
  CHECK(r1.reward == 1);

  CHECK_THROWS_AS(ea_step(big, big.initial_solution(), ops[0], 0, rng), std::invalid_argument);
}

TEST_CASE("ea_step keeps the parent on equal fitness") {
  // every exact-2 offspring of "10" has fitness 1 = parent: strict
  // acceptance must keep the parent bit pattern
  const OneMax p2(2);
  const BitString parent = BitString::parse("10");
  Rng rng(17);
  const auto r = ea_step(p2, parent, {OperatorDescriptor::Kind::ExactBits, 2}, 16, rng);
  CHECK(r.reward == 0);
  CHECK(r.solution == parent);
}

TEST_CASE("ea_step is elitist and counts evaluations") {
  Rng rng(55);
  const int length = 64;
  const OneMax problem(length);
  const auto ops = standard_operator_set();
  for (int trial = 0; trial < 200; ++trial) {
    const BitString parent = random_bits(length, rng);
    const Fitness before = problem.evaluate(parent);
    const auto& op = ops[rng.below(4)];
    const int lambda = 1 + static_cast<int>(rng.below(6));
    const auto r = ea_step(problem, parent, op, lambda, rng);
    const Fitness after = problem.evaluate(r.solution);
    CHECK(after >= before);
    CHECK(r.reward == after - before);
    CHECK(r.reward >= 0);
    CHECK(r.evaluations == lambda);
  }
}

TEST_CASE("ea_step reward law matches the exact gain distribution") {
  // lambda = 1: P(reward = g) = P(gain = g) for g >= 1 and the rest at 0
  const int l = 24;
  const Fitness f = 9;
  BitString parent(l);
  for (int i = 0; i < f; ++i) {
    parent.set(i, true);
  }
  const OneMax problem(l);
  const int trials = 40000;

  const auto ops = standard_operator_set();
  for (std::size_t oi = 0; oi < ops.size(); ++oi) {
    const GainDistribution dist =
        ops[oi].kind == OperatorDescriptor::Kind::ExactBits
            ? gain_distribution_exact_b(f, ops[oi].bits, l)
            : gain_distribution_rate(f, l);
    std::map<int, double> expected;  // reward law after elitist clipping
    double at_zero = 0.0;
    for (const auto& [gain, prob] : dist.support) {
      if (gain >= 1) {
        expected[gain] += prob;
      } else {
        at_zero += prob;
      }
    }
    expected[0] += at_zero;

    Rng rng(900 + static_cast<std::uint64_t>(oi));
    std::map<int, int> observed;
    for (int t = 0; t < trials; ++t) {
      const auto r = ea_step(problem, parent, ops[oi], 1, rng);
      ++observed[r.reward];
    }
    for (const auto& [gain, prob] : expected) {
      if (prob * trials < 5.0) {
        continue;  // too rare for a frequency check
      }
      const double freq = static_cast<double>(observed[gain]) / trials;
      const double tol = 4.0 * std::sqrt(prob * (1.0 - prob) / trials);
      INFO("operator ", ops[oi].name(), " gain ", gain);
      CHECK(std::abs(freq - prob) <= tol);
    }
  }
}
