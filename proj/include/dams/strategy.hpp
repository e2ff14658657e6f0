#pragma once

#include <string_view>
#include <vector>

#include "dams/oracle.hpp"
#include "dams/rng.hpp"
#include "dams/types.hpp"

namespace dams {

/// The (reward, operator) pairs a node sees in one round: its own pair
/// first, then one per neighbor.
struct ReportEntry {
  Reward reward = 0;
  OperatorId op = 0;

  bool operator==(const ReportEntry&) const = default;
};

struct NeighborhoodReport {
  std::vector<ReportEntry> entries;
};

enum class StrategyKind { Sbm, RandomSelect, SequentialOracle };

const char* to_string(StrategyKind kind);
StrategyKind strategy_from_string(std::string_view name);

struct StrategyConfig {
  StrategyKind kind = StrategyKind::Sbm;
  double p_mut = 1e-3;  // Sbm only

  bool operator==(const StrategyConfig&) const = default;
};

/// Select-best-and-mutate: adopt the operator of a maximal-reward entry.
/// The node keeps its own operator when its own entry attains the maximum;
/// otherwise ties break uniformly over the tied entries. With probability
/// p_mut the result is replaced by a uniform pick among the other m-1
/// operators.
OperatorId sbm_select(const NeighborhoodReport& report, double p_mut, int m, Rng& rng);

/// Uniform over all m operators, independent of any report.
OperatorId random_select(int m, Rng& rng);

/// Deterministic lookup of the per-fitness best operator.
OperatorId oracle_select(Fitness fitness, const OracleTable& table);

}  // namespace dams
