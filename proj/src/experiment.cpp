#include "dams/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dams/stats.hpp"

namespace dams {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

[[noreturn]] void parse_fail(int line, const std::string& message) {
  throw std::runtime_error("config line " + std::to_string(line) + ": " + message);
}

long long parse_int(const std::string& text, int line) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(text, &used);
    if (used != text.size()) {
      parse_fail(line, "invalid integer '" + text + "'");
    }
    return value;
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception&) {
    parse_fail(line, "invalid integer '" + text + "'");
  }
}

double parse_real(const std::string& text, int line) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) {
      parse_fail(line, "invalid number '" + text + "'");
    }
    return value;
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception&) {
    parse_fail(line, "invalid number '" + text + "'");
  }
}

std::string format_g6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

ExperimentPlan parse_config(std::istream& in) {
  std::vector<StrategyKind> strategies;
  std::vector<TopologyKind> topologies;
  std::vector<int> sizes;
  std::vector<int> lambdas;
  std::vector<double> pmuts;
  ExperimentPlan plan;

  std::vector<std::string> seen;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) {
      raw.resize(hash);
    }
    const std::string text = trim(raw);
    if (text.empty()) {
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      parse_fail(line, "expected 'key = value'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty()) {
      parse_fail(line, "expected 'key = value'");
    }
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      parse_fail(line, "duplicate key '" + key + "'");
    }
    seen.push_back(key);

    if (key == "strategy") {
      for (const auto& item : split(value, ',')) {
        try {
          strategies.push_back(strategy_from_string(trim(item)));
        } catch (const std::invalid_argument& e) {
          parse_fail(line, e.what());
        }
      }
    } else if (key == "topology") {
      for (const auto& item : split(value, ',')) {
        try {
          topologies.push_back(topology_from_string(trim(item)));
        } catch (const std::invalid_argument& e) {
          parse_fail(line, e.what());
        }
      }
    } else if (key == "n") {
      for (const auto& item : split(value, ',')) {
        sizes.push_back(static_cast<int>(parse_int(trim(item), line)));
      }
    } else if (key == "lambda") {
      for (const auto& item : split(value, ',')) {
        lambdas.push_back(static_cast<int>(parse_int(trim(item), line)));
      }
    } else if (key == "pmut") {
      for (const auto& item : split(value, ',')) {
        pmuts.push_back(parse_real(trim(item), line));
      }
    } else if (key == "runs") {
      plan.runs_per_point = static_cast<int>(parse_int(value, line));
    } else if (key == "l") {
      plan.length = static_cast<int>(parse_int(value, line));
    } else if (key == "seed") {
      plan.master_seed = static_cast<std::uint64_t>(parse_int(value, line));
    } else if (key == "max_rounds") {
      plan.max_rounds = parse_int(value, line);
    } else {
      parse_fail(line, "unknown key '" + key + "'");
    }
  }

  if (topologies.empty() || sizes.empty()) {
    throw std::runtime_error("config: keys 'topology' and 'n' are required");
  }
  if (strategies.empty()) {
    strategies.push_back(StrategyKind::Sbm);
  }
  if (lambdas.empty()) {
    lambdas.push_back(50);
  }
  if (pmuts.empty()) {
    pmuts.push_back(1e-3);
  }
  if (plan.runs_per_point < 1) {
    throw std::runtime_error("config: runs must be >= 1");
  }

  for (StrategyKind strategy : strategies) {
    for (TopologyKind topology : topologies) {
      for (int n : sizes) {
        for (int lambda : lambdas) {
          for (double p_mut : pmuts) {
            plan.points.push_back({strategy, topology, n, lambda, p_mut});
          }
        }
      }
    }
  }

  // Every point must be individually valid, including its topology shape.
  for (std::size_t p = 0; p < plan.points.size(); ++p) {
    try {
      const SimConfig config = to_sim_config(plan, plan.points[p]);
      validate_config(config);
      build_topology(config.topology, config.n);
    } catch (const std::exception& e) {
      throw std::runtime_error("config: point " + std::to_string(p) + " invalid: " + e.what());
    }
  }
  return plan;
}

ExperimentPlan parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  return parse_config(in);
}

std::uint64_t run_seed(std::uint64_t master_seed, int point_index, int run_index) {
  return hash_combine(hash_combine(master_seed, static_cast<std::uint64_t>(point_index)),
                      static_cast<std::uint64_t>(run_index));
}

SimConfig to_sim_config(const ExperimentPlan& plan, const PlanPoint& point) {
  SimConfig config;
  config.topology = point.topology;
  config.n = point.n;
  config.length = plan.length;
  config.lambda = point.lambda;
  config.strategy.kind = point.strategy;
  config.strategy.p_mut = point.p_mut;
  config.max_rounds = plan.max_rounds;
  return config;
}

namespace {

int resolve_workers(int workers) {
  if (workers > 0) {
    return workers;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs tasks [0, count) over a small thread pool; deterministic outputs
/// because tasks write disjoint slots.
template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
  workers = std::min(resolve_workers(workers), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&]() {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= count) {
          return;
        }
        fn(i);
      }
    });
  }
  for (auto& t : threads) {
    t.join();
  }
}

}  // namespace

std::vector<std::vector<RunResult>> run_plan(const ExperimentPlan& plan, int workers,
                                             bool trace) {
  // Oracle points share one table per lambda instead of rebuilding per run.
  std::vector<std::pair<int, OracleTable>> tables;
  for (const auto& point : plan.points) {
    if (point.strategy == StrategyKind::SequentialOracle) {
      const bool have = std::any_of(tables.begin(), tables.end(),
                                    [&](const auto& t) { return t.first == point.lambda; });
      if (!have) {
        tables.emplace_back(point.lambda, build_oracle_table(plan.length, point.lambda));
      }
    }
  }

  std::vector<std::vector<RunResult>> results(plan.points.size());
  for (auto& row : results) {
    row.resize(static_cast<std::size_t>(plan.runs_per_point));
  }
  const int total = static_cast<int>(plan.points.size()) * plan.runs_per_point;
  parallel_for(total, workers, [&](int task) {
    const int p = task / plan.runs_per_point;
    const int r = task % plan.runs_per_point;
    SimConfig config = to_sim_config(plan, plan.points[static_cast<std::size_t>(p)]);
    config.seed = run_seed(plan.master_seed, p, r);
    config.record_frequency_trace = trace;
    if (config.strategy.kind == StrategyKind::SequentialOracle) {
      for (const auto& [lambda, table] : tables) {
        if (lambda == config.lambda) {
          config.oracle_table = table;
          break;
        }
      }
    }
    results[static_cast<std::size_t>(p)][static_cast<std::size_t>(r)] = run(config);
  });
  return results;
}

std::vector<RunResult> run_batch_parallel(const SimConfig& config, int num_runs,
                                          std::uint64_t seed_base, int workers) {
  if (num_runs < 1) {
    throw std::invalid_argument("run_batch_parallel: num_runs must be >= 1");
  }
  std::vector<RunResult> results(static_cast<std::size_t>(num_runs));
  parallel_for(num_runs, workers, [&](int i) {
    SimConfig run_config = config;
    run_config.seed = seed_base + static_cast<std::uint64_t>(i);
    results[static_cast<std::size_t>(i)] = run(run_config);
  });
  return results;
}

namespace {

void write_point_columns(std::ostream& out, const PlanPoint& point, int index) {
  out << index << ',' << to_string(point.strategy) << ',' << to_string(point.topology) << ','
      << point.n << ',' << point.lambda << ',' << format_g6(point.p_mut);
}

/// Index of the run with median rounds (lower median; ties to the lower
/// run index).
std::size_t median_run_index(const std::vector<RunResult>& runs) {
  std::vector<std::size_t> order(runs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (runs[i].rounds != runs[j].rounds) {
      return runs[i].rounds < runs[j].rounds;
    }
    return i < j;
  });
  return order[(order.size() - 1) / 2];
}

}  // namespace

void execute_plan(const ExperimentPlan& plan, const ExecuteOptions& options) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(options.out_dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory: " + options.out_dir);
  }

  const auto results = run_plan(plan, options.workers, options.trace);
  const int m = static_cast<int>(standard_operator_set().size());

  std::ofstream runs_csv(fs::path(options.out_dir) / "runs.csv", std::ios::binary);
  if (!runs_csv) {
    throw std::runtime_error("cannot write runs.csv in " + options.out_dir);
  }
  runs_csv << "point,strategy,topology,n,lambda,pmut,run,seed,rounds,evaluations,messages,"
              "hit_cap\n";
  for (std::size_t p = 0; p < plan.points.size(); ++p) {
    for (std::size_t r = 0; r < results[p].size(); ++r) {
      const auto& run = results[p][r];
      write_point_columns(runs_csv, plan.points[p], static_cast<int>(p));
      runs_csv << ',' << r << ','
               << run_seed(plan.master_seed, static_cast<int>(p), static_cast<int>(r)) << ','
               << run.rounds << ',' << run.evaluations << ',' << run.messages << ','
               << (run.hit_cap ? 1 : 0) << '\n';
    }
  }
  runs_csv.close();

  std::ofstream summary_csv(fs::path(options.out_dir) / "summary.csv", std::ios::binary);
  summary_csv << "point,strategy,topology,n,lambda,pmut,runs,mean_rounds,std_rounds,"
                 "mean_evaluations,mean_messages\n";
  for (std::size_t p = 0; p < plan.points.size(); ++p) {
    std::vector<double> rounds;
    double eval_sum = 0.0;
    double msg_sum = 0.0;
    for (const auto& run : results[p]) {
      rounds.push_back(static_cast<double>(run.rounds));
      eval_sum += static_cast<double>(run.evaluations);
      msg_sum += static_cast<double>(run.messages);
    }
    const SampleSummary s = summarize(rounds);
    write_point_columns(summary_csv, plan.points[p], static_cast<int>(p));
    summary_csv << ',' << results[p].size() << ',' << format_g6(s.mean) << ','
                << format_g6(s.std_dev) << ','
                << format_g6(eval_sum / static_cast<double>(results[p].size())) << ','
                << format_g6(msg_sum / static_cast<double>(results[p].size())) << '\n';
  }
  summary_csv.close();

  if (options.trace) {
    for (std::size_t p = 0; p < plan.points.size(); ++p) {
      const auto& runs = results[p];

      // Median run, integer node counts per operator.
      const auto& median = runs[median_run_index(runs)];
      std::ofstream freq_csv(fs::path(options.out_dir) / ("freq_" + std::to_string(p) + ".csv"),
                             std::ios::binary);
      freq_csv << "round";
      for (int k = 0; k < m; ++k) {
        freq_csv << ",count_op" << k;
      }
      freq_csv << ",max_fitness\n";
      for (std::size_t row = 0; row < median.operator_frequency_trace.size(); ++row) {
        freq_csv << (row + 1);
        for (int count : median.operator_frequency_trace[row]) {
          freq_csv << ',' << count;
        }
        freq_csv << ',' << median.best_fitness_trace[row] << '\n';
      }
      freq_csv.close();

      // Mean over the runs still active at each round.
      std::size_t max_rounds = 0;
      for (const auto& run : runs) {
        max_rounds = std::max(max_rounds, run.operator_frequency_trace.size());
      }
      std::ofstream avg_csv(
          fs::path(options.out_dir) / ("freq_avg_" + std::to_string(p) + ".csv"),
          std::ios::binary);
      avg_csv << "round,runs_active";
      for (int k = 0; k < m; ++k) {
        avg_csv << ",mean_count_op" << k;
      }
      avg_csv << ",mean_max_fitness\n";
      for (std::size_t row = 0; row < max_rounds; ++row) {
        int active = 0;
        std::vector<double> counts(static_cast<std::size_t>(m), 0.0);
        double fitness = 0.0;
        for (const auto& run : runs) {
          if (row < run.operator_frequency_trace.size()) {
            ++active;
            for (int k = 0; k < m; ++k) {
              counts[static_cast<std::size_t>(k)] +=
                  run.operator_frequency_trace[row][static_cast<std::size_t>(k)];
            }
            fitness += static_cast<double>(run.best_fitness_trace[row]);
          }
        }
        avg_csv << (row + 1) << ',' << active;
        for (int k = 0; k < m; ++k) {
          avg_csv << ',' << format_g6(counts[static_cast<std::size_t>(k)] / active);
        }
        avg_csv << ',' << format_g6(fitness / active) << '\n';
      }
    }
  }
}

std::vector<double> read_csv_column(const std::string& path, const std::string& column) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open CSV file: " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("empty CSV file: " + path);
  }
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) {
    line.pop_back();
  }
  const auto header = split(line, ',');
  const auto it = std::find(header.begin(), header.end(), column);
  if (it == header.end()) {
    throw std::runtime_error(path + ": no '" + column + "' column");
  }
  const auto index = static_cast<std::size_t>(it - header.begin());

  std::vector<double> values;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) {
      line.pop_back();
    }
    if (trim(line).empty()) {
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() <= index) {
      throw std::runtime_error(path + " line " + std::to_string(line_no) + ": too few fields");
    }
    values.push_back(parse_real(fields[index], line_no));
  }
  return values;
}

void compare_runs_csv(const std::string& path_a, const std::string& path_b, std::ostream& out) {
  const auto a = read_csv_column(path_a, "rounds");
  const auto b = read_csv_column(path_b, "rounds");
  if (a.empty() || b.empty()) {
    throw std::runtime_error("compare: both files need at least one data row");
  }

  const auto print_summary = [&](const std::string& label, const std::string& path,
                                 const SampleSummary& s) {
    out << label << ": " << path << "  count=" << s.count << " mean=" << format_g6(s.mean)
        << " std=" << format_g6(s.std_dev) << " min=" << format_g6(s.min)
        << " median=" << format_g6(s.median) << " max=" << format_g6(s.max) << "\n";
  };
  print_summary("a", path_a, summarize(a));
  print_summary("b", path_b, summarize(b));

  const MannWhitneyResult mw = mann_whitney(a, b);
  out << "Mann-Whitney U=" << format_g6(mw.u) << " p=" << format_g6(mw.p_two_sided) << "\n";
  if (mw.p_two_sided < 0.01) {
    const double mid = 0.5 * static_cast<double>(a.size()) * static_cast<double>(b.size());
    out << "verdict: significant at 0.01 (" << (mw.u < mid ? "a lower" : "b lower") << ")\n";
  } else {
    out << "verdict: not significant at 0.01\n";
  }
}

}  // namespace dams
