#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dams/engine.hpp"

namespace dams {

/// One sweep point: a fully specified simulator configuration minus seed.
struct PlanPoint {
  StrategyKind strategy = StrategyKind::Sbm;
  TopologyKind topology = TopologyKind::Complete;
  int n = 2;
  int lambda = 50;
  double p_mut = 1e-3;
};

/// A plan expands the sweep axes strategy x topology x n x lambda x pmut
/// (in that nesting order) into points, each run `runs_per_point` times.
struct ExperimentPlan {
  std::vector<PlanPoint> points;
  int runs_per_point = 20;
  int length = 10000;
  std::uint64_t master_seed = 1;
  std::int64_t max_rounds = 1'000'000;
};

/// Parses the line-oriented "key = value" configuration. Axis keys
/// (strategy, topology, n, lambda, pmut) accept comma lists; scalar keys are
/// runs, l, seed, max_rounds. '#' starts a comment. Unknown or duplicate
/// keys, malformed lines and invalid values raise errors naming the line.
ExperimentPlan parse_config(std::istream& in);
ExperimentPlan parse_config_file(const std::string& path);

/// Seed of one run: hash(master_seed, point_index, run_index).
std::uint64_t run_seed(std::uint64_t master_seed, int point_index, int run_index);

SimConfig to_sim_config(const ExperimentPlan& plan, const PlanPoint& point);

/// Runs every (point, run) of the plan; results[p][r] corresponds to
/// run_seed(master, p, r). Worker threads only change the schedule, never
/// the results.
std::vector<std::vector<RunResult>> run_plan(const ExperimentPlan& plan, int workers,
                                             bool trace);

/// Parallel form of run_batch with seeds seed_base + i.
std::vector<RunResult> run_batch_parallel(const SimConfig& config, int num_runs,
                                          std::uint64_t seed_base, int workers);

struct ExecuteOptions {
  std::string out_dir = "results";
  int workers = 0;  // 0 = hardware concurrency
  bool trace = false;
};

/// Executes the plan and writes summary.csv, runs.csv and, with tracing,
/// freq_<point>.csv (median run) plus freq_avg_<point>.csv (mean over runs).
/// Re-running the same plan rewrites the files byte-identically.
void execute_plan(const ExperimentPlan& plan, const ExecuteOptions& options);

/// Reads a named numeric column from a CSV file with a header row.
std::vector<double> read_csv_column(const std::string& path, const std::string& column);

/// Summaries of the "rounds" columns of both files, the Mann-Whitney U and
/// two-sided p, and a significance verdict at the 1% level.
void compare_runs_csv(const std::string& path_a, const std::string& path_b, std::ostream& out);

}  // namespace dams
