#include "dams/strategy.hpp"

#include <stdexcept>
#include <string>

namespace dams {

const char* to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Sbm:
      return "sbm";
    case StrategyKind::RandomSelect:
      return "random";
    case StrategyKind::SequentialOracle:
      return "seq-oracle";
  }
  return "?";
}

StrategyKind strategy_from_string(std::string_view name) {
  if (name == "sbm") return StrategyKind::Sbm;
  if (name == "random") return StrategyKind::RandomSelect;
  if (name == "seq-oracle") return StrategyKind::SequentialOracle;
  throw std::invalid_argument("unknown strategy: " + std::string(name));
}

OperatorId sbm_select(const NeighborhoodReport& report, double p_mut, int m, Rng& rng) {
  if (report.entries.empty()) {
    throw std::invalid_argument("sbm_select: report must not be empty");
  }
  if (p_mut < 0.0 || p_mut > 1.0) {
    throw std::invalid_argument("sbm_select: p_mut must lie in [0, 1]");
  }
  if (m < 1) {
    throw std::invalid_argument("sbm_select: m must be >= 1");
  }
  if (m < 2 && p_mut > 0.0) {
    throw std::invalid_argument("sbm_select: metaheuristic mutation needs m >= 2");
  }

  Reward best = report.entries.front().reward;
  int ties = 0;
  for (const auto& entry : report.entries) {
    if (entry.op < 0 || entry.op >= m) {
      throw std::invalid_argument("sbm_select: operator index out of range");
    }
    if (entry.reward > best) {
      best = entry.reward;
      ties = 1;
    } else if (entry.reward == best) {
      ++ties;
    }
  }
  OperatorId k_best;
  if (report.entries.front().reward == best) {
    // The node's own operator stays whenever it attains the best reward.
    // A uniform draw here instead would turn the reward-less stretches of a
    // run into neutral drift of the operator frequencies, with long
    // excursions onto useless operators; holding position keeps the
    // flooded operator in place until some reward beats it.
    k_best = report.entries.front().op;
  } else {
    int pick = ties > 1 ? static_cast<int>(rng.below(static_cast<std::uint32_t>(ties))) : 0;
    k_best = 0;
    for (const auto& entry : report.entries) {
      if (entry.reward == best && pick-- == 0) {
        k_best = entry.op;
        break;
      }
    }
  }

  if (p_mut > 0.0 && rng.unit_real() < p_mut) {
    const auto other = static_cast<OperatorId>(rng.below(static_cast<std::uint32_t>(m - 1)));
    return other >= k_best ? other + 1 : other;
  }
  return k_best;
}

OperatorId random_select(int m, Rng& rng) {
  if (m < 1) {
    throw std::invalid_argument("random_select: m must be >= 1");
  }
  return static_cast<OperatorId>(rng.below(static_cast<std::uint32_t>(m)));
}

OperatorId oracle_select(Fitness fitness, const OracleTable& table) {
  if (fitness < 0 || fitness > table.length) {
    throw std::invalid_argument("oracle_select: fitness outside [0, length]");
  }
  return table.ops[static_cast<std::size_t>(fitness)];
}

}  // namespace dams
