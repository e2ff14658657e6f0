#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dams/engine.hpp"
#include "dams/experiment.hpp"
#include "dams/operators.hpp"
#include "dams/oracle.hpp"
#include "dams/problem.hpp"
#include "dams/stats.hpp"
#include "dams/strategy.hpp"
#include "dams/topology.hpp"
#include "dams/types.hpp"

namespace py = pybind11;
using namespace dams;

namespace {

OperatorDescriptor op_from_index(OperatorId k) {
  const auto ops = standard_operator_set();
  if (k < 0 || k >= static_cast<OperatorId>(ops.size())) {
    throw std::invalid_argument("operator index out of range");
  }
  return ops[static_cast<std::size_t>(k)];
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Round-synchronous simulator of distributed adaptive metaheuristic selection";

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def_static("stream", &Rng::stream, py::arg("master_seed"), py::arg("stream_id"))
      .def("next_u64", &Rng::next_u64)
      .def("below", &Rng::below, py::arg("bound"))
      .def("unit_real", &Rng::unit_real)
      .def("binomial", &Rng::binomial, py::arg("n"), py::arg("p"))
      .def_property_readonly("state", &Rng::state);

  py::class_<BitString>(m, "BitString")
      .def(py::init<int>(), py::arg("length"))
      .def_static("parse", &BitString::parse, py::arg("bits"))
      .def_property_readonly("length", &BitString::length)
      .def("test", &BitString::test, py::arg("i"))
      .def("set", &BitString::set, py::arg("i"), py::arg("value"))
      .def("flip", &BitString::flip, py::arg("i"))
      .def("count_ones", &BitString::count_ones)
      .def("__str__", &BitString::to_string)
      .def("__eq__", [](const BitString& a, const BitString& b) { return a == b; });

  m.def("hamming_distance", &hamming_distance, py::arg("a"), py::arg("b"));

  py::class_<OneMax>(m, "OneMax")
      .def(py::init<int>(), py::arg("length"))
      .def_property_readonly("length", &OneMax::length)
      .def_property_readonly("optimum", &OneMax::optimum)
      .def("evaluate", &OneMax::evaluate, py::arg("x"))
      .def("initial_solution", &OneMax::initial_solution);

  m.def(
      "mutate_exact_b",
      [](const BitString& x, int b, Rng& rng) { return mutate_exact_b(x, b, rng); },
      py::arg("x"), py::arg("b"), py::arg("rng"));
  m.def(
      "mutate_rate", [](const BitString& x, Rng& rng) { return mutate_rate(x, rng); },
      py::arg("x"), py::arg("rng"));
  m.def(
      "ea_step",
      [](const BitString& x, OperatorId op, int lambda, Rng& rng) {
        const OneMax problem(x.length());
        const EaStepResult r = ea_step(problem, x, op_from_index(op), lambda, rng);
        return py::make_tuple(r.solution, r.reward, r.evaluations);
      },
      py::arg("x"), py::arg("op"), py::arg("lambda_"), py::arg("rng"),
      "One (1+lambda)-EA iteration with a standard operator index; returns "
      "(solution, reward, evaluations).");

  py::class_<Graph>(m, "Graph")
      .def_readonly("n", &Graph::n)
      .def_readonly("adjacency", &Graph::adjacency)
      .def_readonly("edge_count", &Graph::edge_count)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("edge_list", [](const Graph& g) {
        std::ostringstream out;
        write_edge_list(g, out);
        return out.str();
      });
  m.def("build_complete", &build_complete, py::arg("n"));
  m.def("build_grid", &build_grid, py::arg("n"));
  m.def("build_cycle", &build_cycle, py::arg("n"));

  m.def(
      "sbm_select",
      [](const std::vector<std::pair<Reward, OperatorId>>& entries, double p_mut, int m_ops,
         Rng& rng) {
        NeighborhoodReport report;
        for (const auto& [reward, op] : entries) {
          report.entries.push_back({reward, op});
        }
        return sbm_select(report, p_mut, m_ops, rng);
      },
      py::arg("entries"), py::arg("p_mut"), py::arg("m"), py::arg("rng"),
      "entries: [(reward, operator)] with the node's own pair first.");
  m.def("random_select", &random_select, py::arg("m"), py::arg("rng"));
  m.def("oracle_select", &oracle_select, py::arg("fitness"), py::arg("table"));

  py::class_<GainDistribution>(m, "GainDistribution")
      .def_readonly("support", &GainDistribution::support)
      .def("total_probability", &GainDistribution::total_probability)
      .def("mean", &GainDistribution::mean)
      .def("prob_greater_than", &GainDistribution::prob_greater_than, py::arg("g"));
  m.def("gain_distribution_exact_b", &gain_distribution_exact_b, py::arg("f"), py::arg("b"),
        py::arg("l"));
  m.def("gain_distribution_rate", &gain_distribution_rate, py::arg("f"), py::arg("l"),
        py::arg("tail_cut") = 0);
  m.def("expected_ea_gain", &expected_ea_gain, py::arg("dist"), py::arg("lambda_"));

  py::class_<OracleTable>(m, "OracleTable")
      .def_readonly("length", &OracleTable::length)
      .def_readonly("lambda_", &OracleTable::lambda)
      .def_readonly("ops", &OracleTable::ops);
  m.def("build_oracle_table", &build_oracle_table, py::arg("l"), py::arg("lambda_"));
  m.def("prob_at_most_five_flips", &prob_at_most_five_flips, py::arg("l"));
  m.def("prob_network_gain_exceeds_five", &prob_network_gain_exceeds_five, py::arg("l"),
        py::arg("lambda_"), py::arg("n"));

  py::enum_<TopologyKind>(m, "TopologyKind")
      .value("Complete", TopologyKind::Complete)
      .value("Grid", TopologyKind::Grid)
      .value("Cycle", TopologyKind::Cycle);
  py::enum_<StrategyKind>(m, "StrategyKind")
      .value("Sbm", StrategyKind::Sbm)
      .value("RandomSelect", StrategyKind::RandomSelect)
      .value("SequentialOracle", StrategyKind::SequentialOracle);

  py::class_<StrategyConfig>(m, "StrategyConfig")
      .def(py::init<>())
      .def_readwrite("kind", &StrategyConfig::kind)
      .def_readwrite("p_mut", &StrategyConfig::p_mut);

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("topology", &SimConfig::topology)
      .def_readwrite("n", &SimConfig::n)
      .def_readwrite("length", &SimConfig::length)
      .def_readwrite("lambda_", &SimConfig::lambda)
      .def_readwrite("strategy", &SimConfig::strategy)
      .def_readwrite("max_rounds", &SimConfig::max_rounds)
      .def_readwrite("seed", &SimConfig::seed)
      .def_readwrite("record_frequency_trace", &SimConfig::record_frequency_trace);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("rounds", &RunResult::rounds)
      .def_readonly("evaluations", &RunResult::evaluations)
      .def_readonly("messages", &RunResult::messages)
      .def_readonly("hit_cap", &RunResult::hit_cap)
      .def_readonly("best_fitness_trace", &RunResult::best_fitness_trace)
      .def_readonly("operator_frequency_trace", &RunResult::operator_frequency_trace)
      .def("__eq__", [](const RunResult& a, const RunResult& b) { return a == b; });

  m.def("run", &run, py::arg("config"), py::call_guard<py::gil_scoped_release>());
  m.def("run_batch", &run_batch, py::arg("config"), py::arg("num_runs"), py::arg("seed_base"),
        py::call_guard<py::gil_scoped_release>());

  py::class_<SampleSummary>(m, "SampleSummary")
      .def_readonly("count", &SampleSummary::count)
      .def_readonly("mean", &SampleSummary::mean)
      .def_readonly("std_dev", &SampleSummary::std_dev)
      .def_readonly("min", &SampleSummary::min)
      .def_readonly("max", &SampleSummary::max)
      .def_readonly("median", &SampleSummary::median);
  m.def("summarize", [](const std::vector<double>& xs) { return summarize(xs); },
        py::arg("samples"));
  m.def(
      "mann_whitney",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        const MannWhitneyResult r = mann_whitney(a, b);
        return py::make_tuple(r.u, r.p_two_sided);
      },
      py::arg("a"), py::arg("b"), "Returns (U, two-sided p).");
}
