#include "dams/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace dams {

SampleSummary summarize(std::span<const double> samples) {
  if (samples.empty()) {
    throw std::invalid_argument("summarize: need at least one sample");
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());

  SampleSummary s;
  s.count = sorted.size();
  s.min = sorted.front();
  s.max = sorted.back();
  const std::size_t mid = sorted.size() / 2;
  s.median = sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
  if (sorted.size() > 1) {
    double ss = 0.0;
    for (double x : sorted) {
      ss += (x - s.mean) * (x - s.mean);
    }
    s.std_dev = std::sqrt(ss / static_cast<double>(sorted.size() - 1));
  }
  return s;
}

namespace {

/// Midranks of the pooled samples; returns (ranks in pooled order, tie sizes).
std::pair<std::vector<double>, std::vector<std::size_t>> midranks(std::span<const double> a,
                                                                  std::span<const double> b) {
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::vector<std::size_t> order(pooled.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return pooled[i] < pooled[j]; });

  std::vector<double> ranks(pooled.size(), 0.0);
  std::vector<std::size_t> tie_sizes;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && pooled[order[j + 1]] == pooled[order[i]]) {
      ++j;
    }
    const double midrank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) {
      ranks[order[k]] = midrank;
    }
    tie_sizes.push_back(j - i + 1);
    i = j + 1;
  }
  return {std::move(ranks), std::move(tie_sizes)};
}

double u_from_rank_sum(double rank_sum_a, std::size_t na) {
  return rank_sum_a - 0.5 * static_cast<double>(na) * static_cast<double>(na + 1);
}

void check_nonempty(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("mann_whitney: both samples must be non-empty");
  }
}

}  // namespace

double mann_whitney_u(std::span<const double> a, std::span<const double> b) {
  check_nonempty(a, b);
  const auto [ranks, ties] = midranks(a, b);
  double rank_sum_a = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    rank_sum_a += ranks[i];
  }
  return u_from_rank_sum(rank_sum_a, a.size());
}

double mann_whitney_exact_p(std::span<const double> a, std::span<const double> b) {
  check_nonempty(a, b);
  const auto [ranks, ties] = midranks(a, b);
  const std::size_t n = ranks.size();
  const std::size_t na = a.size();
  const double u_obs = mann_whitney_u(a, b);

  // Every C(n, na) assignment of the pooled midranks to sample a.
  std::vector<char> mask(n, 0);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(na), 1);
  std::sort(mask.begin(), mask.end(), std::greater<char>());
  std::size_t total = 0;
  std::size_t count_le = 0;
  std::size_t count_ge = 0;
  // Iterate combinations via prev_permutation on the descending mask.
  do {
    double rank_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[i]) {
        rank_sum += ranks[i];
      }
    }
    const double u = u_from_rank_sum(rank_sum, na);
    ++total;
    if (u <= u_obs + 1e-9) {
      ++count_le;
    }
    if (u >= u_obs - 1e-9) {
      ++count_ge;
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));

  const double p = 2.0 * static_cast<double>(std::min(count_le, count_ge)) /
                   static_cast<double>(total);
  return std::min(p, 1.0);
}

double mann_whitney_normal_p(std::span<const double> a, std::span<const double> b) {
  check_nonempty(a, b);
  const auto [ranks, ties] = midranks(a, b);
  const auto na = static_cast<double>(a.size());
  const auto nb = static_cast<double>(b.size());
  const double n = na + nb;
  const double u = mann_whitney_u(a, b);
  const double mean = 0.5 * na * nb;

  double tie_term = 0.0;
  for (std::size_t t : ties) {
    const auto td = static_cast<double>(t);
    tie_term += td * td * td - td;
  }
  const double variance = na * nb / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
  if (variance <= 0.0) {
    return 1.0;  // all pooled values identical
  }
  const double z = std::max(0.0, (std::abs(u - mean) - 0.5) / std::sqrt(variance));
  return std::erfc(z / std::sqrt(2.0));
}

MannWhitneyResult mann_whitney(std::span<const double> a, std::span<const double> b) {
  check_nonempty(a, b);
  MannWhitneyResult result;
  result.u = mann_whitney_u(a, b);
  result.p_two_sided =
      a.size() + b.size() <= 16 ? mann_whitney_exact_p(a, b) : mann_whitney_normal_p(a, b);
  return result;
}

}  // namespace dams
