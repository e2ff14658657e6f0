#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dams/experiment.hpp"
#include "dams/oracle.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Round-synchronous simulator for distributed adaptive metaheuristic selection"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "results";
  int workers = 0;
  bool trace = false;
  std::uint64_t seed_override = 0;
  bool seed_set = false;
  auto* run_cmd = app.add_subcommand("run", "Execute an experiment plan and write CSV results");
  run_cmd->add_option("config", config_path, "Plan file (key = value lines)")->required();
  run_cmd->add_option("--out", out_dir, "Output directory (default: results)");
  run_cmd->add_option("--workers", workers, "Parallel run workers (default: all cores)");
  run_cmd->add_flag("--trace", trace, "Write per-point operator frequency traces");
  run_cmd->add_option("--seed", seed_override, "Override the plan's master seed")
      ->each([&](const std::string&) { seed_set = true; });

  std::string csv_a;
  std::string csv_b;
  auto* compare_cmd =
      app.add_subcommand("compare", "Mann-Whitney comparison of two runs.csv files");
  compare_cmd->add_option("a", csv_a, "First runs CSV")->required();
  compare_cmd->add_option("b", csv_b, "Second runs CSV")->required();

  int table_l = 10000;
  int table_lambda = 50;
  std::string table_out;
  auto* oracle_cmd =
      app.add_subcommand("oracle-table", "Write the per-fitness best-operator table as CSV");
  oracle_cmd->add_option("--l", table_l, "Bit-string length");
  oracle_cmd->add_option("--lambda", table_lambda, "Offspring per EA iteration");
  oracle_cmd->add_option("--out", table_out, "Output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      dams::ExperimentPlan plan = dams::parse_config_file(config_path);
      if (seed_set) {
        plan.master_seed = seed_override;
      }
      dams::ExecuteOptions options;
      options.out_dir = out_dir;
      options.workers = workers;
      options.trace = trace;
      dams::execute_plan(plan, options);
      std::cout << plan.points.size() << " point(s) x " << plan.runs_per_point
                << " run(s) written to " << out_dir << "\n";
    } else if (compare_cmd->parsed()) {
      dams::compare_runs_csv(csv_a, csv_b, std::cout);
    } else if (oracle_cmd->parsed()) {
      const dams::OracleTable table = dams::build_oracle_table(table_l, table_lambda);
      std::ofstream out(table_out, std::ios::binary);
      if (!out) {
        throw std::runtime_error("cannot write " + table_out);
      }
      dams::write_oracle_table_csv(table, out);
      std::cout << "oracle table (l=" << table_l << ", lambda=" << table_lambda
                << ") written to " << table_out << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
