#include "dams/engine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "dams/problem.hpp"

namespace dams {

namespace {

struct NodeBuf {
  Envelope env;         // the round-start snapshot neighbors read
  Fitness fitness = 0;  // cached fitness of env.solution
};

}  // namespace

void validate_config(const SimConfig& config) {
  if (config.n < 1) {
    throw std::invalid_argument("config: n must be >= 1");
  }
  if (config.length < 1) {
    throw std::invalid_argument("config: length must be >= 1");
  }
  if (config.lambda < 1) {
    throw std::invalid_argument("config: lambda must be >= 1");
  }
  if (config.max_rounds < 1) {
    throw std::invalid_argument("config: max_rounds must be >= 1");
  }
  if (config.operators.empty()) {
    throw std::invalid_argument("config: operator set must not be empty");
  }
  for (const auto& op : config.operators) {
    if (op.kind == OperatorDescriptor::Kind::ExactBits &&
        (op.bits < 1 || op.bits > config.length)) {
      throw std::invalid_argument("config: exact-b operator needs 1 <= b <= length");
    }
  }
  const auto m = static_cast<int>(config.operators.size());
  if (config.strategy.kind == StrategyKind::Sbm) {
    if (config.strategy.p_mut < 0.0 || config.strategy.p_mut > 1.0) {
      throw std::invalid_argument("config: p_mut must lie in [0, 1]");
    }
    if (m < 2 && config.strategy.p_mut > 0.0) {
      throw std::invalid_argument("config: SBM with p_mut > 0 needs at least 2 operators");
    }
  }
  if (config.strategy.kind == StrategyKind::SequentialOracle) {
    if (config.oracle_table) {
      if (config.oracle_table->length != config.length) {
        throw std::invalid_argument("config: oracle table length mismatch");
      }
    } else if (config.operators != standard_operator_set()) {
      throw std::invalid_argument(
          "config: sequential oracle with a non-standard operator set needs an explicit table");
    }
  }
  if (config.initial_operator && (*config.initial_operator < 0 || *config.initial_operator >= m)) {
    throw std::invalid_argument("config: initial operator index out of range");
  }
}

RunResult run(const SimConfig& config) {
  validate_config(config);
  const Graph graph = build_topology(config.topology, config.n);
  const OneMax problem(config.length);
  const auto m = static_cast<int>(config.operators.size());

  OracleTable table;
  if (config.strategy.kind == StrategyKind::SequentialOracle) {
    table = config.oracle_table ? *config.oracle_table
                                : build_oracle_table(config.length, config.lambda);
  }

  // Double-buffered node snapshots: every read within a round sees the
  // round-start state, so node processing order cannot matter.
  std::vector<NodeBuf> prev(static_cast<std::size_t>(config.n));
  std::vector<NodeBuf> next(static_cast<std::size_t>(config.n));
  std::vector<Rng> rngs;
  rngs.reserve(static_cast<std::size_t>(config.n));
  for (int v = 0; v < config.n; ++v) {
    rngs.push_back(Rng::stream(config.seed, static_cast<std::uint64_t>(v)));
    auto& node = prev[static_cast<std::size_t>(v)];
    node.env.solution = problem.initial_solution();
    node.fitness = problem.evaluate(node.env.solution);
    node.env.reward = 0;
    // Balanced assignment keeps every operator represented from round 0,
    // so small networks do not flood an arbitrary operator by default.
    node.env.op =
        config.initial_operator ? *config.initial_operator : static_cast<OperatorId>(v % m);
    next[static_cast<std::size_t>(v)].env.solution = BitString(config.length);
  }

  EaStepper stepper(problem);
  NeighborhoodReport report;
  report.entries.reserve(static_cast<std::size_t>(config.n));
  std::vector<int> order(static_cast<std::size_t>(config.n));
  std::iota(order.begin(), order.end(), 0);
  if (config.node_order == NodeOrder::Reverse) {
    std::reverse(order.begin(), order.end());
  }
  Rng order_rng = Rng::stream(config.seed, ~std::uint64_t{0});

  RunResult result;
  Fitness best_fitness = 0;
  for (int v = 0; v < config.n; ++v) {
    best_fitness = std::max(best_fitness, prev[static_cast<std::size_t>(v)].fitness);
  }
  std::vector<int> op_counts(static_cast<std::size_t>(m), 0);

  while (best_fitness < problem.optimum() && result.rounds < config.max_rounds) {
    if (config.node_order == NodeOrder::Shuffled) {
      for (int i = config.n - 1; i > 0; --i) {
        std::swap(order[static_cast<std::size_t>(i)],
                  order[order_rng.below(static_cast<std::uint32_t>(i + 1))]);
      }
    }
    std::fill(op_counts.begin(), op_counts.end(), 0);

    for (int v : order) {
      const auto& self = prev[static_cast<std::size_t>(v)];
      auto& out = next[static_cast<std::size_t>(v)];
      auto& rng = rngs[static_cast<std::size_t>(v)];
      const auto& neighbors = graph.adjacency[static_cast<std::size_t>(v)];

      // Migration: adopt a best incoming solution only if strictly better;
      // ties among equal best senders break uniformly.
      Fitness best_incoming = self.fitness;
      int tied = 0;
      for (int u : neighbors) {
        const Fitness fu = prev[static_cast<std::size_t>(u)].fitness;
        if (fu > best_incoming) {
          best_incoming = fu;
          tied = 1;
        } else if (fu == best_incoming && best_incoming > self.fitness) {
          ++tied;
        }
      }
      if (best_incoming > self.fitness) {
        int pick = tied > 1 ? static_cast<int>(rng.below(static_cast<std::uint32_t>(tied))) : 0;
        for (int u : neighbors) {
          if (prev[static_cast<std::size_t>(u)].fitness == best_incoming && pick-- == 0) {
            out.env.solution = prev[static_cast<std::size_t>(u)].env.solution;
            break;
          }
        }
        out.fitness = best_incoming;
      } else {
        out.env.solution = self.env.solution;
        out.fitness = self.fitness;
      }

      // Selection: own (reward, operator) pair first, then the neighbors'.
      OperatorId k = 0;
      switch (config.strategy.kind) {
        case StrategyKind::Sbm:
          report.entries.clear();
          report.entries.push_back({self.env.reward, self.env.op});
          for (int u : neighbors) {
            const auto& env = prev[static_cast<std::size_t>(u)].env;
            report.entries.push_back({env.reward, env.op});
          }
          k = sbm_select(report, config.strategy.p_mut, m, rng);
          break;
        case StrategyKind::RandomSelect:
          k = random_select(m, rng);
          break;
        case StrategyKind::SequentialOracle:
          k = oracle_select(out.fitness, table);
          break;
      }
      ++op_counts[static_cast<std::size_t>(k)];

      // Atomic level: one (1+lambda)-EA iteration with the chosen operator.
      const Reward reward = stepper.step_in_place(
          out.env.solution, out.fitness, config.operators[static_cast<std::size_t>(k)],
          config.lambda, rng);
      out.env.op = k;
      out.env.reward = reward;
    }

    std::swap(prev, next);
    ++result.rounds;
    result.messages += graph.edge_count;

    best_fitness = 0;
    for (int v = 0; v < config.n; ++v) {
      best_fitness = std::max(best_fitness, prev[static_cast<std::size_t>(v)].fitness);
    }
    result.best_fitness_trace.push_back(best_fitness);
    if (config.record_frequency_trace) {
      result.operator_frequency_trace.push_back(op_counts);
    }
    if (config.record_node_fitness_trace) {
      std::vector<Fitness> row;
      row.reserve(static_cast<std::size_t>(config.n));
      for (int v = 0; v < config.n; ++v) {
        row.push_back(prev[static_cast<std::size_t>(v)].fitness);
      }
      result.node_fitness_trace.push_back(std::move(row));
    }
  }

  result.evaluations = stepper.evaluations();
  result.hit_cap = best_fitness < problem.optimum();
  return result;
}

std::vector<RunResult> run_batch(const SimConfig& config, int num_runs, std::uint64_t seed_base) {
  if (num_runs < 1) {
    throw std::invalid_argument("run_batch: num_runs must be >= 1");
  }
  std::vector<RunResult> results;
  results.reserve(static_cast<std::size_t>(num_runs));
  SimConfig run_config = config;
  for (int i = 0; i < num_runs; ++i) {
    run_config.seed = seed_base + static_cast<std::uint64_t>(i);
    results.push_back(run(run_config));
  }
  return results;
}

}  // namespace dams
