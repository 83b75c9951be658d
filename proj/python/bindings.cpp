#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "forcelab/errors.hpp"
#include "forcelab/families.hpp"
#include "forcelab/forcing.hpp"
#include "forcelab/report.hpp"
#include "forcelab/solver.hpp"
#include "forcelab/verify.hpp"

namespace py = pybind11;
using namespace forcelab;

namespace {

VertexSet to_set(const Graph& g, const std::vector<Vertex>& ids) {
  VertexSet s;
  for (Vertex v : ids) {
    if (v >= g.order())
      throw UsageError("vertex " + std::to_string(v) + " is out of range");
    s.insert(v);
  }
  return s;
}

py::object loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

SolveOptions make_options(unsigned workers, std::uint64_t budget_evals,
                          double budget_secs, bool vertex_transitive) {
  SolveOptions o;
  o.workers = workers;
  o.budget.max_closures = budget_evals;
  o.budget.max_seconds = budget_secs;
  o.assume_vertex_transitive = vertex_transitive;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact leaky zero forcing";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded",
                                         PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n,
                       const std::vector<std::pair<Vertex, Vertex>>& edges) {
             return Graph(n, edges);
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_static("from_edge_list",
                  [](const std::string& text) { return parse_edge_list(text); })
      .def("to_edge_list", &to_edge_list)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             if (v >= g.order()) throw UsageError("vertex out of range");
             return g.neighbors(v).to_vector();
           })
      .def("__len__", &Graph::order)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("hypercube", &hypercube, py::arg("d"));
  m.def("half_cube_set",
        [](std::size_t d) { return half_cube_set(d).to_vector(); },
        py::arg("d"));
  m.def("generalized_petersen", &generalized_petersen, py::arg("n"),
        py::arg("k"));
  m.def("complete_bipartite", &complete_bipartite, py::arg("m"),
        py::arg("n"));
  m.def("wheel", &wheel, py::arg("n"));
  m.def("path", &path, py::arg("n"));
  m.def("cycle", &cycle, py::arg("n"));
  m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));

  m.def(
      "closure",
      [](const Graph& g, const std::vector<Vertex>& initial,
         const std::vector<Vertex>& leaks) {
        return loads(to_json(closure(g, to_set(g, initial), to_set(g, leaks))));
      },
      py::arg("graph"), py::arg("initial"),
      py::arg("leaks") = std::vector<Vertex>{},
      "Play the game once; returns the trace as a dict.");
  m.def(
      "is_zero_forcing_set",
      [](const Graph& g, const std::vector<Vertex>& initial) {
        return is_zero_forcing_set(g, to_set(g, initial));
      },
      py::arg("graph"), py::arg("initial"));
  m.def(
      "check",
      [](const Graph& g, const std::vector<Vertex>& initial,
         std::size_t leaks, unsigned workers) {
        LeakyCheck result;
        {
          py::gil_scoped_release release;
          result = is_leaky_forcing_set(g, to_set(g, initial), leaks, workers);
        }
        return loads(to_json(result, nullptr));
      },
      py::arg("graph"), py::arg("initial"), py::arg("leaks"),
      py::arg("workers") = 1u);
  m.def(
      "mandatory_vertices",
      [](const Graph& g, std::size_t leaks) {
        return mandatory_vertices(g, leaks).to_vector();
      },
      py::arg("graph"), py::arg("leaks"));
  m.def(
      "solve",
      [](const Graph& g, std::size_t leaks, unsigned workers,
         std::uint64_t budget_evals, double budget_secs,
         bool assume_vertex_transitive) {
        SolveReport report;
        {
          py::gil_scoped_release release;
          report = min_leaky_forcing(
              g, leaks,
              make_options(workers, budget_evals, budget_secs,
                           assume_vertex_transitive));
        }
        return loads(to_json(report));
      },
      py::arg("graph"), py::arg("leaks"), py::arg("workers") = 1u,
      py::arg("budget_evals") = SearchBudget{}.max_closures,
      py::arg("budget_secs") = SearchBudget{}.max_seconds,
      py::arg("assume_vertex_transitive") = false);
  m.def(
      "containment",
      [](const Graph& g, std::size_t leaks, unsigned workers) {
        ContainmentReport report;
        {
          py::gil_scoped_release release;
          report = containment_question(g, leaks,
                                        make_options(workers, SearchBudget{}.max_closures,
                                                     SearchBudget{}.max_seconds, false));
        }
        return loads(to_json(report));
      },
      py::arg("graph"), py::arg("leaks"), py::arg("workers") = 1u);
  m.def(
      "chain",
      [](const Graph& g, std::size_t max_leaks, unsigned workers) {
        ChainReport report;
        {
          py::gil_scoped_release release;
          report = nested_chain(g, max_leaks,
                                make_options(workers, SearchBudget{}.max_closures,
                                             SearchBudget{}.max_seconds, false));
        }
        return loads(to_json(report));
      },
      py::arg("graph"), py::arg("max_leaks"), py::arg("workers") = 1u);
  m.def("suite_names", &suite_names);
  m.def(
      "verify",
      [](const std::string& suite, unsigned workers, bool include_d7) {
        VerifyOptions options;
        options.workers = workers;
        options.include_d7 = include_d7;
        std::vector<ClaimResult> results;
        {
          py::gil_scoped_release release;
          results = run_suite(suite, options);
        }
        return loads(to_json(results));
      },
      py::arg("suite") = "all", py::arg("workers") = 1u,
      py::arg("include_d7") = false);
}
