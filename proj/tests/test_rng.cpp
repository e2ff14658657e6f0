#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <vector>

#include "dams/rng.hpp"

using dams::hash_combine;
using dams::Rng;

TEST_CASE("streams are reproducible and distinct") {
  Rng a = Rng::stream(42, 0);
  Rng b = Rng::stream(42, 0);
  Rng c = Rng::stream(42, 1);
  Rng d = Rng::stream(43, 0);
  bool all_equal = true;
  bool differs_from_c = false;
  bool differs_from_d = false;
  for (int i = 0; i < 64; ++i) {
    const auto va = a.next_u64();
    all_equal = all_equal && va == b.next_u64();
    differs_from_c = differs_from_c || va != c.next_u64();
    differs_from_d = differs_from_d || va != d.next_u64();
  }
  CHECK(all_equal);
  CHECK(differs_from_c);
  CHECK(differs_from_d);
}

TEST_CASE("hash_combine separates indices") {
  std::vector<std::uint64_t> seen;
  for (int p = 0; p < 40; ++p) {
    for (int r = 0; r < 40; ++r) {
      seen.push_back(hash_combine(hash_combine(7, p), r));
    }
  }
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("below is in range and roughly uniform") {
  Rng rng(5);
  CHECK_THROWS_AS(rng.below(0), std::invalid_argument);

  const int draws = 40000;
  std::vector<int> counts(5, 0);
  for (int i = 0; i < draws; ++i) {
    const auto v = rng.below(5);
    REQUIRE(v < 5);
    ++counts[v];
  }
  // 3 sigma around draws/5 for a binomial(draws, 1/5)
  const double expected = draws / 5.0;
  const double tol = 3.0 * std::sqrt(draws * 0.2 * 0.8);
  for (int c : counts) {
    CHECK(std::abs(c - expected) <= tol);
  }
}

TEST_CASE("unit_real stays in [0,1)") {
  Rng rng(9);
  double sum = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.unit_real();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / 20000.0 - 0.5) < 3.0 * (1.0 / std::sqrt(12.0)) / std::sqrt(20000.0));
}

TEST_CASE("binomial sampling matches its mean") {
  Rng rng(33);
  CHECK(rng.binomial(0, 0.5) == 0);
  CHECK(rng.binomial(10, 0.0) == 0);
  CHECK(rng.binomial(10, 1.0) == 10);

  const int n = 10000;
  const double p = 1.0 / n;
  const int trials = 20000;
  double sum = 0.0;
  for (int i = 0; i < trials; ++i) {
    const int k = rng.binomial(n, p);
    REQUIRE(k >= 0);
    REQUIRE(k <= n);
    sum += k;
  }
  // mean 1, variance ~1 for Binomial(n, 1/n)
  CHECK(std::abs(sum / trials - 1.0) < 3.0 / std::sqrt(static_cast<double>(trials)));
}

TEST_CASE("sample_distinct draws uniform subsets") {
  Rng rng(77);
  std::vector<int> out;

  rng.sample_distinct(10, 0, out);
  CHECK(out.empty());
  rng.sample_distinct(6, 6, out);
  std::sort(out.begin(), out.end());
  CHECK(out == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK_THROWS_AS(rng.sample_distinct(3, 4, out), std::invalid_argument);

  const int upper = 30;
  const int count = 4;
  const int trials = 30000;
  std::vector<int> hits(upper, 0);
  for (int t = 0; t < trials; ++t) {
    rng.sample_distinct(upper, count, out);
    std::sort(out.begin(), out.end());
    REQUIRE(std::adjacent_find(out.begin(), out.end()) == out.end());
    for (int v : out) {
      REQUIRE(v >= 0);
      REQUIRE(v < upper);
      ++hits[static_cast<std::size_t>(v)];
    }
  }
  const double expected = static_cast<double>(trials) * count / upper;
  const double prob = static_cast<double>(count) / upper;
  const double tol = 4.0 * std::sqrt(trials * prob * (1.0 - prob));
  for (int h : hits) {
    CHECK(std::abs(h - expected) <= tol);
  }
}

TEST_CASE("state round trip") {
  Rng rng(123);
  rng.next_u64();
  Rng copy = Rng::from_state(rng.state());
  CHECK(copy == rng);
  CHECK(copy.next_u64() == rng.next_u64());
}
