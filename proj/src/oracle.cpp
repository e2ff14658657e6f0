#include "dams/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dams/operators.hpp"

namespace dams {

namespace {

// Binomial coefficients evaluated in long double. Direct products keep
// relative error near machine epsilon for the small pick counts the
// operators use; a log-factorial route covers the rest of the range.
class Combinatorics {
 public:
  explicit Combinatorics(int l) : l_(l) {}

  long double choose(int n, int k) const {
    if (k < 0 || k > n) {
      return 0.0L;
    }
    k = std::min(k, n - k);
    if (k <= 256) {
      long double value = 1.0L;
      for (int t = 1; t <= k; ++t) {
        value = value * static_cast<long double>(n - k + t) / static_cast<long double>(t);
      }
      return value;
    }
    ensure_log_table(n);
    return std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k));
  }

  /// P(i zeros flipped) of the exact-b law at fitness f:
  /// C(l-f, i) * C(f, b-i) / C(l, b).
  double hypergeometric(int f, int b, int i) const {
    const long double num = choose(l_ - f, i) * choose(f, b - i);
    return static_cast<double>(num / choose(l_, b));
  }

  /// Binomial(l, 1/l) weights for k = 0..cut via the ratio recurrence.
  std::vector<long double> rate_weights(int cut) const {
    const long double p = 1.0L / static_cast<long double>(l_);
    const long double ratio = p / (1.0L - p);
    std::vector<long double> w(static_cast<std::size_t>(cut) + 1);
    w[0] = std::exp(static_cast<long double>(l_) * std::log1p(-p));
    for (int k = 1; k <= cut; ++k) {
      w[static_cast<std::size_t>(k)] = w[static_cast<std::size_t>(k) - 1] * ratio *
                                       static_cast<long double>(l_ - k + 1) /
                                       static_cast<long double>(k);
    }
    return w;
  }

 private:
  void ensure_log_table(int n) const {
    while (static_cast<int>(log_factorials_.size()) <= n) {
      const auto next = static_cast<long double>(log_factorials_.size());
      log_factorials_.push_back(next == 0.0L ? 0.0L
                                             : log_factorials_.back() + std::log(next));
    }
  }
  long double log_factorial(int n) const { return log_factorials_[static_cast<std::size_t>(n)]; }

  int l_;
  mutable std::vector<long double> log_factorials_{0.0L};
};

GainDistribution exact_b_with_cache(const Combinatorics& comb, Fitness f, int b, int l) {
  GainDistribution dist;
  const int zeros = l - f;
  const int i_lo = std::max(0, b - f);
  const int i_hi = std::min(b, zeros);
  dist.support.reserve(static_cast<std::size_t>(i_hi - i_lo) + 1);
  for (int i = i_lo; i <= i_hi; ++i) {
    dist.support.emplace_back(2 * i - b, comb.hypergeometric(f, b, i));
  }
  return dist;
}

GainDistribution rate_with_cache(const Combinatorics& comb,
                                 const std::vector<long double>& weights, Fitness f, int l) {
  const int cut = static_cast<int>(weights.size()) - 1;

  // Mixture over flip counts, accumulated on a dense gain axis [-cut, cut].
  std::vector<long double> mass(static_cast<std::size_t>(2 * cut) + 1, 0.0L);
  long double weight_total = weights[0];
  mass[static_cast<std::size_t>(cut)] = weights[0];  // k = 0: gain 0
  for (int k = 1; k <= cut; ++k) {
    const long double wk = weights[static_cast<std::size_t>(k)];
    weight_total += wk;
    const int i_lo = std::max(0, k - f);
    const int i_hi = std::min(k, l - f);
    for (int i = i_lo; i <= i_hi; ++i) {
      mass[static_cast<std::size_t>(2 * i - k + cut)] +=
          wk * static_cast<long double>(comb.hypergeometric(f, k, i));
    }
  }

  GainDistribution dist;
  for (int gain = -cut; gain <= cut; ++gain) {
    const long double p = mass[static_cast<std::size_t>(gain + cut)];
    if (p > 0.0L) {
      dist.support.emplace_back(gain, static_cast<double>(p / weight_total));
    }
  }
  return dist;
}

}  // namespace

double GainDistribution::total_probability() const {
  double total = 0.0;
  for (const auto& [gain, p] : support) {
    total += p;
  }
  return total;
}

double GainDistribution::mean() const {
  double m = 0.0;
  for (const auto& [gain, p] : support) {
    m += static_cast<double>(gain) * p;
  }
  return m;
}

double GainDistribution::prob_greater_than(int g) const {
  double total = 0.0;
  for (const auto& [gain, p] : support) {
    if (gain > g) {
      total += p;
    }
  }
  return total;
}

GainDistribution gain_distribution_exact_b(Fitness f, int b, int l) {
  if (f < 0 || f > l || b < 1 || b > l) {
    throw std::invalid_argument("gain_distribution_exact_b: need 0 <= f <= l and 1 <= b <= l");
  }
  return exact_b_with_cache(Combinatorics(l), f, b, l);
}

int rate_flip_tail_cut(int l) {
  const auto w = Combinatorics(l).rate_weights(std::min(l, 64));
  long double cumulative = 0.0L;
  for (int k = 0; k < static_cast<int>(w.size()); ++k) {
    cumulative += w[static_cast<std::size_t>(k)];
    if (1.0L - cumulative < 1e-13L) {
      return k;
    }
  }
  return l;
}

GainDistribution gain_distribution_rate(Fitness f, int l, int tail_cut) {
  if (f < 0 || f > l) {
    throw std::invalid_argument("gain_distribution_rate: need 0 <= f <= l");
  }
  const int cut = tail_cut > 0 ? std::min(tail_cut, l) : rate_flip_tail_cut(l);
  const Combinatorics comb(l);
  return rate_with_cache(comb, comb.rate_weights(cut), f, l);
}

double expected_ea_gain(const GainDistribution& dist, int lambda) {
  if (lambda < 1) {
    throw std::invalid_argument("expected_ea_gain: lambda must be >= 1");
  }
  // E[max(0, max of lambda iid gains)] = sum_{g >= 1} (1 - F(g-1)^lambda).
  const int top = dist.max_gain();
  double expected = 0.0;
  double cdf = 0.0;
  std::size_t i = 0;
  for (int g = 1; g <= top; ++g) {
    while (i < dist.support.size() && dist.support[i].first <= g - 1) {
      cdf += dist.support[i].second;
      ++i;
    }
    expected += 1.0 - std::pow(std::min(cdf, 1.0), lambda);
  }
  return expected;
}

OracleTable build_oracle_table(int l, int lambda) {
  if (l < 1 || lambda < 1) {
    throw std::invalid_argument("build_oracle_table: need l >= 1 and lambda >= 1");
  }
  const auto operators = standard_operator_set();
  const Combinatorics comb(l);
  const auto weights = comb.rate_weights(rate_flip_tail_cut(l));

  OracleTable table;
  table.length = l;
  table.lambda = lambda;
  table.ops.resize(static_cast<std::size_t>(l) + 1);
  for (Fitness f = 0; f <= l; ++f) {
    OperatorId best_op = 0;
    double best_gain = -1.0;
    for (OperatorId k = 0; k < static_cast<OperatorId>(operators.size()); ++k) {
      const auto& op = operators[static_cast<std::size_t>(k)];
      GainDistribution dist;
      if (op.kind == OperatorDescriptor::Kind::ExactBits) {
        if (op.bits > l) {
          continue;
        }
        dist = exact_b_with_cache(comb, f, op.bits, l);
      } else {
        dist = rate_with_cache(comb, weights, f, l);
      }
      const double gain = expected_ea_gain(dist, lambda);
      if (gain > best_gain) {  // strict: ties keep the lower operator index
        best_gain = gain;
        best_op = k;
      }
    }
    table.ops[static_cast<std::size_t>(f)] = best_op;
  }
  return table;
}

double prob_at_most_five_flips(int l) {
  if (l < 1) {
    throw std::invalid_argument("prob_at_most_five_flips: l must be >= 1");
  }
  const auto weights = Combinatorics(l).rate_weights(std::min(5, l));
  long double alpha = 0.0L;
  for (const long double w : weights) {
    alpha += w;
  }
  return static_cast<double>(std::min(alpha, 1.0L));
}

double prob_network_gain_exceeds_five(int l, int lambda, int n) {
  if (l < 1 || lambda < 1 || n < 1) {
    throw std::invalid_argument("prob_network_gain_exceeds_five: all arguments must be >= 1");
  }
  const long double alpha = static_cast<long double>(prob_at_most_five_flips(l));
  const long double trials = static_cast<long double>(lambda) * static_cast<long double>(n);
  // 1 - alpha^(lambda n), assembled as -expm1 to keep precision when alpha ~ 1.
  return static_cast<double>(-std::expm1(trials * std::log(alpha)));
}

void write_oracle_table_csv(const OracleTable& table, std::ostream& out) {
  out << "fitness,operator\n";
  for (std::size_t f = 0; f < table.ops.size(); ++f) {
    out << f << ',' << table.ops[f] << '\n';
  }
}

OracleTable read_oracle_table_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "fitness,operator") {
    throw std::runtime_error("oracle table CSV: missing 'fitness,operator' header");
  }
  OracleTable table;
  Fitness expected_fitness = 0;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("oracle table CSV: malformed row '" + line + "'");
    }
    const Fitness f = std::stoi(line.substr(0, comma));
    const OperatorId op = std::stoi(line.substr(comma + 1));
    if (f != expected_fitness) {
      throw std::runtime_error("oracle table CSV: fitness values must be contiguous from 0");
    }
    table.ops.push_back(op);
    ++expected_fitness;
  }
  if (table.ops.empty()) {
    throw std::runtime_error("oracle table CSV: no rows");
  }
  table.length = static_cast<int>(table.ops.size()) - 1;
  table.lambda = 0;
  return table;
}

}  // namespace dams
