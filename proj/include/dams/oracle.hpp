#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "dams/types.hpp"

namespace dams {

/// Exact probability law of the fitness gain of one offspring, for a given
/// operator at a given parent fitness. Support is ascending by gain and
/// probabilities sum to 1 within 1e-12.
struct GainDistribution {
  std::vector<std::pair<int, double>> support;  // (gain, probability)

  double total_probability() const;
  double mean() const;
  /// P(gain > g).
  double prob_greater_than(int g) const;
  int max_gain() const { return support.empty() ? 0 : support.back().first; }
};

/// Gain law of the exact-b mutation at fitness f on strings of length l:
/// flipping i zeros and b-i ones gives gain 2i - b with hypergeometric
/// probability C(l-f, i) * C(f, b-i) / C(l, b).
GainDistribution gain_distribution_exact_b(Fitness f, int b, int l);

/// Smallest flip-count cut with truncated Binomial(l, 1/l) tail below 1e-13.
int rate_flip_tail_cut(int l);

/// Gain law of the rate-1/l bit-flip at fitness f: mixture over the flip
/// count k ~ Binomial(l, 1/l), truncated at tail_cut (0 = automatic) and
/// renormalized, of the exact-k hypergeometric law.
GainDistribution gain_distribution_rate(Fitness f, int l, int tail_cut = 0);

/// E[max(0, max of lambda iid gains)] — the expected fitness gain of one
/// elitist (1+lambda)-EA iteration — via the tail sum over the gain CDF.
double expected_ea_gain(const GainDistribution& dist, int lambda);

/// Per-fitness best operator of the standard four-operator set under the
/// expected one-iteration gain, ties to the lower operator index.
struct OracleTable {
  int length = 0;
  int lambda = 0;  // 0 when unknown (e.g. loaded from CSV)
  std::vector<OperatorId> ops;  // index = fitness, size length + 1

  bool operator==(const OracleTable&) const = default;
};

OracleTable build_oracle_table(int l, int lambda);

/// P(a single rate-1/l application flips at most 5 bits):
/// sum_{i=0}^{5} C(l,i) (1/l)^i (1-1/l)^(l-i).
double prob_at_most_five_flips(int l);

/// P(best gain over a network of n nodes, lambda offspring each, running
/// rate-1/l bit-flip from the all-zeros string, exceeds 5) = 1 - alpha^(lambda*n).
double prob_network_gain_exceeds_five(int l, int lambda, int n);

/// CSV round trip, header "fitness,operator".
void write_oracle_table_csv(const OracleTable& table, std::ostream& out);
OracleTable read_oracle_table_csv(std::istream& in);

}  // namespace dams
