#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "batchlp/batch.hpp"
#include "batchlp/box_solver.hpp"
#include "batchlp/errors.hpp"
#include "batchlp/generator.hpp"
#include "batchlp/mps.hpp"
#include "batchlp/oracle.hpp"
#include "batchlp/simplex.hpp"

namespace py = pybind11;
using namespace batchlp;

namespace {

StandardFormLP make_lp(std::vector<double> c, std::vector<std::vector<double>> A,
                       std::vector<double> b) {
  StandardFormLP lp;
  lp.n = c.size();
  lp.m = b.size();
  lp.c = std::move(c);
  lp.A = std::move(A);
  lp.b = std::move(b);
  return lp;
}

SolverLimits limits(std::optional<std::size_t> max_iterations) {
  SolverLimits l;
  l.max_iterations = max_iterations;
  return l;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dense two-phase simplex for batches of small LPs";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BatchTooLarge>(m, "BatchTooLarge", base.ptr());
  py::register_exception<HeterogeneousBatch>(m, "HeterogeneousBatch", base.ptr());
  py::register_exception<UnsupportedFeature>(m, "UnsupportedFeature", base.ptr());

  py::class_<StandardFormLP>(m, "StandardFormLP",
                             "maximize c.x subject to A x <= b, x >= 0")
      .def(py::init(&make_lp), py::arg("c"), py::arg("A"), py::arg("b"))
      .def_readonly("n", &StandardFormLP::n)
      .def_readonly("m", &StandardFormLP::m)
      .def_readonly("c", &StandardFormLP::c)
      .def_readonly("A", &StandardFormLP::A)
      .def_readonly("b", &StandardFormLP::b)
      .def("__repr__", [](const StandardFormLP& lp) {
        return "<StandardFormLP n=" + std::to_string(lp.n) + " m=" + std::to_string(lp.m) + ">";
      });

  py::class_<SolveOutcome>(m, "SolveOutcome")
      .def_property_readonly("status",
                             [](const SolveOutcome& o) { return std::string(to_string(o.status)); })
      .def_readonly("objective_value", &SolveOutcome::objective_value)
      .def_readonly("primal_point", &SolveOutcome::primal_point)
      .def_readonly("iterations_phase1", &SolveOutcome::iterations_phase1)
      .def_readonly("iterations_phase2", &SolveOutcome::iterations_phase2)
      .def_readonly("basis", &SolveOutcome::basis)
      .def_property_readonly("optimal", &SolveOutcome::optimal)
      .def("__repr__", [](const SolveOutcome& o) {
        std::string s = "<SolveOutcome " + std::string(to_string(o.status));
        if (o.objective_value) s += " objective=" + std::to_string(*o.objective_value);
        return s + ">";
      });

  m.def(
      "solve",
      [](const StandardFormLP& lp, std::optional<std::size_t> max_iterations) {
        py::gil_scoped_release release;
        return solve(lp, limits(max_iterations));
      },
      py::arg("lp"), py::arg("max_iterations") = py::none(),
      "Two-phase simplex on one LP.");

  m.def(
      "batch_solve",
      [](const std::vector<StandardFormLP>& lps, std::size_t workers,
         std::uint64_t memory_budget, std::optional<std::size_t> max_iterations) {
        BatchConfig config;
        config.workers = workers;
        config.memory_budget_bytes = memory_budget;
        config.limits = limits(max_iterations);
        BatchReport report;
        {
          py::gil_scoped_release release;
          report = batch_solve(lps, config);
        }
        py::list out;
        for (std::size_t i = 0; i < lps.size(); ++i) {
          if (report.errors[i].empty()) {
            out.append(py::cast(report.outcomes[i]));
          } else {
            out.append(py::str(report.errors[i]));
          }
        }
        return out;
      },
      py::arg("lps"), py::arg("workers") = 1, py::arg("memory_budget") = kDefaultMemoryBudget,
      py::arg("max_iterations") = py::none(),
      "Solves LPs of one shape; failed entries are returned as error strings.");

  m.def(
      "gen_random_lps",
      [](std::size_t dim, std::size_t count, std::uint64_t seed, bool feasible_start) {
        return gen_random_lps(dim, count, seed, feasible_start);
      },
      py::arg("dim"), py::arg("count"), py::arg("seed") = 1, py::arg("feasible_start") = true);

  m.def(
      "solve_box",
      [](std::vector<double> lower, std::vector<double> upper, std::vector<double> direction) {
        const BoxSolution s = solve_box({std::move(lower), std::move(upper), std::move(direction)});
        return py::make_tuple(s.value, s.point);
      },
      py::arg("lower"), py::arg("upper"), py::arg("direction"),
      "max direction.x over the box; returns (value, point).");

  m.def(
      "solve_mps",
      [](const std::filesystem::path& path, std::optional<std::size_t> max_iterations) {
        const MpsModel model = parse_mps_file(path);
        const GeneralSolution sol = solve_general(lower_to_general(model), limits(max_iterations));
        py::dict point;
        for (std::size_t j = 0; j < sol.point.size(); ++j) point[py::str(model.columns[j])] = sol.point[j];
        py::dict out;
        out["status"] = std::string(to_string(sol.status));
        out["objective"] = sol.objective_value;
        out["solution"] = point;
        return out;
      },
      py::arg("path"), py::arg("max_iterations") = py::none(),
      "Parses, lowers and solves an MPS file; objective in the file's own sense.");

  m.def(
      "certify",
      [](const StandardFormLP& lp, const SolveOutcome& outcome) {
        return oracle::check_certificate(lp, outcome).certified();
      },
      py::arg("lp"), py::arg("outcome"));

  m.def("lp_memory_bytes", &lp_memory_bytes, py::arg("m"), py::arg("n"), py::arg("num_slack"),
        py::arg("num_artificial"), py::arg("data_size") = 8);

  m.def(
      "plan_chunks",
      [](std::size_t count, std::uint64_t lp_bytes, std::uint64_t memory_budget) {
        BatchConfig config;
        config.memory_budget_bytes = memory_budget;
        std::vector<std::pair<std::size_t, std::size_t>> chunks;
        for (const Chunk& c : plan_chunks(count, lp_bytes, config).chunks) {
          chunks.emplace_back(c.begin, c.end);
        }
        return chunks;
      },
      py::arg("count"), py::arg("lp_bytes"), py::arg("memory_budget"));
}
