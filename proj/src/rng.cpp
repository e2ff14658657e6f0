#include "dams/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dams {

std::uint32_t Rng::below(std::uint32_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("Rng::below: bound must be >= 1");
  }
  // Lemire's multiply-shift with rejection; unbiased.
  std::uint64_t x = next_u64() >> 32;
  std::uint64_t m = x * bound;
  auto low = static_cast<std::uint32_t>(m);
  if (low < bound) {
    const std::uint32_t threshold = (0u - bound) % bound;
    while (low < threshold) {
      x = next_u64() >> 32;
      m = x * bound;
      low = static_cast<std::uint32_t>(m);
    }
  }
  return static_cast<std::uint32_t>(m >> 32);
}

int Rng::binomial(int n, double p) {
  if (n < 0) {
    throw std::invalid_argument("Rng::binomial: n must be >= 0");
  }
  if (n == 0 || p <= 0.0) {
    return 0;
  }
  if (p >= 1.0) {
    return n;
  }
  const double u = unit_real();
  const double q = 1.0 - p;
  const double ratio = p / q;
  double pmf = std::pow(q, n);  // P(K = 0)
  double cdf = pmf;
  int k = 0;
  while (u >= cdf && k < n) {
    ++k;
    pmf *= ratio * static_cast<double>(n - k + 1) / static_cast<double>(k);
    cdf += pmf;
  }
  return k;
}

void Rng::sample_distinct(int upper_bound, int count, std::vector<int>& out) {
  if (count < 0 || count > upper_bound) {
    throw std::invalid_argument("Rng::sample_distinct: need 0 <= count <= upper_bound");
  }
  out.clear();
  for (int t = upper_bound - count; t < upper_bound; ++t) {
    const int j = static_cast<int>(below(static_cast<std::uint32_t>(t + 1)));
    if (std::find(out.begin(), out.end(), j) != out.end()) {
      out.push_back(t);
    } else {
      out.push_back(j);
    }
  }
}

}  // namespace dams
