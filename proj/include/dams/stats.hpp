#pragma once

#include <cstddef>
#include <span>

namespace dams {

struct SampleSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double std_dev = 0.0;  // unbiased (n-1 denominator), 0 for a single sample
  double min = 0.0;
  double max = 0.0;
  double median = 0.0;
};

SampleSummary summarize(std::span<const double> samples);

struct MannWhitneyResult {
  double u = 0.0;  // U statistic of sample a, midrank ties
  double p_two_sided = 1.0;
};

/// Two-sided Mann-Whitney test. Exact enumeration of all rank splits when
/// the combined size is <= 16, normal approximation with tie and continuity
/// corrections above.
MannWhitneyResult mann_whitney(std::span<const double> a, std::span<const double> b);

// The two routes, exposed for cross-checks.
double mann_whitney_u(std::span<const double> a, std::span<const double> b);
double mann_whitney_exact_p(std::span<const double> a, std::span<const double> b);
double mann_whitney_normal_p(std::span<const double> a, std::span<const double> b);

}  // namespace dams
