#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dams/operators.hpp"
#include "dams/oracle.hpp"
#include "dams/strategy.hpp"
#include "dams/topology.hpp"
#include "dams/types.hpp"

namespace dams {

/// Node processing order within a round. Results must not depend on it:
/// nodes read round-start snapshots only and draw from their own streams.
enum class NodeOrder { Forward, Reverse, Shuffled };

struct SimConfig {
  TopologyKind topology = TopologyKind::Complete;
  int n = 2;
  int length = 10000;  // bits per solution
  int lambda = 50;     // offspring per atomic application
  std::vector<OperatorDescriptor> operators = standard_operator_set();
  StrategyConfig strategy;
  /// Required by SequentialOracle with a non-standard operator set; built
  /// on demand for the standard set.
  std::optional<OracleTable> oracle_table;
  std::int64_t max_rounds = 1'000'000;
  std::uint64_t seed = 0;
  bool record_frequency_trace = false;
  /// Per-round per-node fitness rows; diagnostic, used by the test suite.
  bool record_node_fitness_trace = false;
  /// Fix every node's initial operator instead of the balanced
  /// node_id-mod-m assignment.
  std::optional<OperatorId> initial_operator;
  NodeOrder node_order = NodeOrder::Forward;
};

struct RunResult {
  std::int64_t rounds = 0;  // rounds executed; rounds-to-optimum unless hit_cap
  std::int64_t evaluations = 0;  // = lambda * n * rounds
  std::int64_t messages = 0;     // = |E| * rounds
  bool hit_cap = false;
  std::vector<Fitness> best_fitness_trace;                 // global max after each round
  std::vector<std::vector<int>> operator_frequency_trace;  // per round: nodes per operator
  std::vector<std::vector<Fitness>> node_fitness_trace;    // per round: fitness per node

  bool operator==(const RunResult&) const = default;
};

/// Executes rounds of message exchange, elitist migration, operator
/// selection and one (1+lambda)-EA iteration per node until some node
/// reaches the optimum or max_rounds is hit. Deterministic in the seed.
RunResult run(const SimConfig& config);

/// Independent runs with seeds seed_base + i for i in [0, num_runs).
std::vector<RunResult> run_batch(const SimConfig& config, int num_runs, std::uint64_t seed_base);

/// Throws std::invalid_argument on an inconsistent configuration.
void validate_config(const SimConfig& config);

}  // namespace dams
