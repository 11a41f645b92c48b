#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "assign/bench.hpp"
#include "assign/matrix_io.hpp"
#include "assign/solvers.hpp"

namespace py = pybind11;
using namespace assign;

namespace {

CostMatrix to_matrix(const std::vector<std::vector<Cost>>& rows) { return CostMatrix(rows); }

py::dict report_dict(const SolveReport& r) {
  py::dict d;
  d["optimal_cost"] = r.optimal_cost;
  d["assignment"] = r.assignment.mapping;
  d["nodes_expanded"] = r.nodes_expanded;
  d["edges_generated"] = r.edges_generated;
  d["elapsed_ns"] = r.elapsed.count();
  if (r.certificate) {
    py::dict c;
    c["row_potentials"] = r.certificate->row_potentials;
    c["col_potentials"] = r.certificate->col_potentials;
    d["certificate"] = c;
  } else {
    d["certificate"] = py::none();
  }
  return d;
}

SolverKind solver_or_throw(const std::string& name) {
  auto kind = parse_solver(name);
  if (!kind) throw Error(ErrorCode::kUnknownSolver, "unknown solver '" + name + "'");
  return *kind;
}

std::vector<bench::BenchRecord> to_records(const py::list& rows) {
  std::vector<bench::BenchRecord> out;
  for (const auto& item : rows) {
    const auto d = item.cast<py::dict>();
    bench::BenchRecord r;
    r.solver = solver_or_throw(d["solver"].cast<std::string>());
    r.k = d["k"].cast<std::size_t>();
    r.seed = d["seed"].cast<std::uint64_t>();
    r.trial = d["trial"].cast<std::size_t>();
    const std::string status = d.contains("status") ? d["status"].cast<std::string>() : "ok";
    r.status = status == "ok"        ? bench::RecordStatus::kOk
               : status == "skipped" ? bench::RecordStatus::kSkippedByCap
                                     : bench::RecordStatus::kError;
    if (r.status == bench::RecordStatus::kOk) {
      r.nodes_expanded = d["nodes_expanded"].cast<std::uint64_t>();
      r.edges_generated = d["edges_generated"].cast<std::uint64_t>();
      r.elapsed_ns = d["elapsed_ns"].cast<std::uint64_t>();
      r.optimal_cost = d["optimal_cost"].cast<Cost>();
    }
    out.push_back(r);
  }
  return out;
}

py::list from_records(const std::vector<bench::BenchRecord>& records) {
  py::list out;
  for (const auto& r : records) {
    py::dict d;
    d["solver"] = std::string(solver_name(r.solver));
    d["k"] = r.k;
    d["seed"] = r.seed;
    d["trial"] = r.trial;
    d["status"] = r.status == bench::RecordStatus::kOk             ? "ok"
                  : r.status == bench::RecordStatus::kSkippedByCap ? "skipped"
                                                                   : "error";
    d["nodes_expanded"] = r.nodes_expanded;
    d["edges_generated"] = r.edges_generated;
    d["elapsed_ns"] = r.elapsed_ns;
    d["optimal_cost"] = r.optimal_cost;
    if (r.status == bench::RecordStatus::kError) d["error"] = r.error;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Balanced assignment solvers and benchmark harness";

  auto error = py::register_exception<Error>(m, "AssignError", PyExc_ValueError);
  (void)error;

  m.attr("SOLVERS") = [] {
    py::list names;
    for (SolverKind kind : kAllSolvers) names.append(std::string(solver_name(kind)));
    return names;
  }();
  m.attr("CSV_HEADER") = bench::kCsvHeader;

  m.def(
      "solve",
      [](const std::vector<std::vector<Cost>>& rows, const std::string& solver,
         std::optional<std::size_t> max_size) {
        return report_dict(solve(solver_or_throw(solver), to_matrix(rows), SolveOptions{max_size}));
      },
      py::arg("matrix"), py::arg("solver") = "hungarian", py::arg("max_size") = py::none(),
      "Solve a square cost matrix (list of rows) with the named solver.");

  m.def(
      "solve_bnb_stats",
      [](const std::vector<std::vector<Cost>>& rows, const std::string& solver) {
        const auto strategy = bnb_strategy(solver_or_throw(solver));
        if (!strategy) throw Error(ErrorCode::kUnknownSolver, solver + " is not branch and bound");
        const auto result = solve_bnb_detailed(to_matrix(rows), *strategy);
        py::dict d = report_dict(result.report);
        d["nodes_generated"] = result.stats.nodes_generated;
        d["max_frontier"] = result.stats.max_frontier;
        return d;
      },
      py::arg("matrix"), py::arg("solver") = "bnb_astar");

  m.def(
      "verify_certificate",
      [](const std::vector<std::vector<Cost>>& rows, const std::vector<std::size_t>& assignment,
         const std::vector<Cost>& row_potentials, const std::vector<Cost>& col_potentials,
         Cost optimal_cost) -> std::optional<std::string> {
        SolveReport r;
        r.optimal_cost = optimal_cost;
        r.assignment = Assignment{assignment};
        r.certificate = DualCertificate{row_potentials, col_potentials};
        if (auto bad = verify_certificate(to_matrix(rows), r)) return bad->detail;
        return std::nullopt;
      },
      py::arg("matrix"), py::arg("assignment"), py::arg("row_potentials"),
      py::arg("col_potentials"), py::arg("optimal_cost"),
      "None when the potentials certify the assignment, else a description.");

  m.def(
      "assignment_cost",
      [](const std::vector<std::vector<Cost>>& rows, const std::vector<std::size_t>& mapping) {
        return assignment_cost(to_matrix(rows), Assignment{mapping});
      },
      py::arg("matrix"), py::arg("assignment"));

  m.def(
      "parse_matrix", [](const std::string& text) { return parse_matrix(text).grid().to_rows(); },
      py::arg("text"));
  m.def(
      "serialize_matrix",
      [](const std::vector<std::vector<Cost>>& rows) { return serialize_matrix(to_matrix(rows)); },
      py::arg("matrix"));

  m.def(
      "gen_instance",
      [](std::size_t k, std::uint64_t seed, Cost lo, Cost hi) {
        return bench::gen_instance(k, seed, {lo, hi}).grid().to_rows();
      },
      py::arg("k"), py::arg("seed"), py::arg("lo") = 0, py::arg("hi") = 99);
  m.def("trial_seed", &bench::trial_seed, py::arg("base_seed"), py::arg("k"), py::arg("trial"));

  m.def(
      "run_suite",
      [](const std::vector<std::size_t>& sizes, std::size_t trials, std::uint64_t seed,
         std::optional<std::vector<std::string>> solvers, Cost lo, Cost hi) {
        bench::BenchConfig config;
        config.sizes = sizes;
        config.trials_per_size = trials;
        config.seed = seed;
        config.cost_range = {lo, hi};
        if (solvers) {
          config.solvers.clear();
          for (const auto& name : *solvers) config.solvers.push_back(solver_or_throw(name));
        }
        std::vector<bench::BenchRecord> records;
        {
          py::gil_scoped_release release;
          records = bench::run_suite(config);
        }
        return from_records(records);
      },
      py::arg("sizes"), py::arg("trials") = 1, py::arg("seed") = 0, py::arg("solvers") = py::none(),
      py::arg("lo") = 0, py::arg("hi") = 99);

  m.def(
      "emit_csv", [](const py::list& records) { return bench::emit_csv(to_records(records)); },
      py::arg("records"));
  m.def(
      "emit_svg_plot",
      [](const py::list& records) { return bench::emit_svg_plot(to_records(records)); },
      py::arg("records"));
}
