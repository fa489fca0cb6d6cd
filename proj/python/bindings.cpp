#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "busfactor/edge_list.hpp"
#include "busfactor/errors.hpp"
#include "busfactor/experiments.hpp"
#include "busfactor/generator.hpp"
#include "busfactor/graph.hpp"
#include "busfactor/heuristics.hpp"
#include "busfactor/measures.hpp"

namespace py = pybind11;
using namespace busfactor;

namespace {

py::dict features_dict(const StructuralFeatures& f) {
    py::dict d;
    d["n_people"] = f.n_people;
    d["n_tasks"] = f.n_tasks;
    d["n_edges"] = f.n_edges;
    d["density"] = f.density;
    d["leaf_people"] = f.leaf_people;
    d["leaf_tasks"] = f.leaf_tasks;
    d["assortativity"] = f.assortativity_defined ? py::object(py::float_(f.assortativity))
                                                 : py::object(py::none());
    return d;
}

py::tuple order_tuple(const RemovalOrder& order) {
    return py::make_tuple(order.people, order.partial);
}

}  // namespace

PYBIND11_MODULE(_busfactor, m) {
    m.doc() = "Bus-factor estimation for bipartite people-task graphs";

    py::register_exception<NotFoundError>(m, "NotFoundError");
    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<GenerationError>(m, "GenerationError");
    py::register_exception<GuardError>(m, "GuardError");

    py::class_<BipartiteGraph>(m, "BipartiteGraph")
        .def(py::init<>())
        .def("add_person", [](BipartiteGraph& g, const std::string& id) { g.add_person(id); })
        .def("add_task", [](BipartiteGraph& g, const std::string& id) { g.add_task(id); })
        .def("add_edge",
             [](BipartiteGraph& g, const std::string& p, const std::string& t) {
                 g.add_edge(p, t);
             })
        .def_property_readonly("num_people", &BipartiteGraph::num_people)
        .def_property_readonly("num_tasks", &BipartiteGraph::num_tasks)
        .def_property_readonly("num_edges", &BipartiteGraph::num_edges)
        .def("people", &BipartiteGraph::people)
        .def("tasks", &BipartiteGraph::tasks)
        .def("degree", [](const BipartiteGraph& g, const std::string& id) { return g.degree(id); })
        .def("coverage", &BipartiteGraph::coverage)
        .def("max_connected_tasks", &BipartiteGraph::max_connected_tasks)
        .def("is_connected", &BipartiteGraph::is_connected)
        .def("remove_people",
             [](const BipartiteGraph& g, const std::vector<std::string>& ids) {
                 return g.remove_people(ids);
             })
        .def("structural_features",
             [](const BipartiteGraph& g) { return features_dict(g.structural_features()); })
        .def("edges",
             [](const BipartiteGraph& g) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (std::size_t p = 0; p < g.num_people(); ++p) {
                     for (int t : g.person_neighbors(static_cast<int>(p))) {
                         out.emplace_back(g.person_id(static_cast<int>(p)), g.task_id(t));
                     }
                 }
                 return out;
             })
        .def("__eq__", [](const BipartiteGraph& a, const BipartiteGraph& b) { return a == b; });

    m.def("read_edge_list_file", &read_edge_list_file);
    m.def("write_edge_list_file", &write_edge_list_file);
    m.def("loads", [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
    });
    m.def("dumps", [](const BipartiteGraph& g) {
        std::ostringstream out;
        write_edge_list(g, out);
        return out.str();
    });

    m.def("minimum_coverage_order",
          [](const BipartiteGraph& g) { return order_tuple(minimum_coverage_order(g)); });
    m.def("maximum_coverage_order",
          [](const BipartiteGraph& g) { return order_tuple(maximum_coverage_order(g)); });
    m.def("greedy_tau_order", [](const BipartiteGraph& g, std::size_t threshold) {
        return order_tuple(greedy_tau_order(g, threshold));
    });
    m.def("mixed_order",
          [](const BipartiteGraph& g, const std::string& base, std::size_t threshold) {
              const auto b = base == "max_cov" ? BaseHeuristic::MaxCoverage
                                               : BaseHeuristic::MinCoverage;
              return order_tuple(mixed_order(g, b, threshold));
          });
    m.def("degree_order", [](const BipartiteGraph& g) { return order_tuple(degree_order(g)); });
    m.def("greedy_isolation_order",
          [](const BipartiteGraph& g) { return order_tuple(greedy_isolation_order(g)); });

    auto to_order = [](const std::vector<std::string>& people, bool partial) {
        return RemovalOrder{people, partial};
    };
    m.def("coverage_curve",
          [to_order](const BipartiteGraph& g, const std::vector<std::string>& order) {
              return coverage_curve(g, to_order(order, false)).values;
          });
    m.def("tau_curve",
          [to_order](const BipartiteGraph& g, const std::vector<std::string>& order) {
              return tau_curve(g, to_order(order, false)).values;
          });
    m.def("estimate_avelino",
          [to_order](const BipartiteGraph& g, const std::vector<std::string>& order, double t) {
              return estimate_avelino(g, to_order(order, false), t);
          });
    m.def("estimate_zazworka",
          [to_order](const BipartiteGraph& g, const std::vector<std::string>& order, double t) {
              return estimate_zazworka(g, to_order(order, false), t);
          });
    m.def("estimate_piccolo",
          [to_order](const BipartiteGraph& g, const std::vector<std::string>& order) {
              return estimate_piccolo(g, to_order(order, false));
          });
    m.def("exact_avelino", &exact_avelino);
    m.def("exact_piccolo", &exact_piccolo);
    m.def("combined_estimate",
          [](const BipartiteGraph& g, const std::string& measure, double avelino_t,
             std::size_t tau_threshold) {
              const auto m_ = measure == "piccolo" ? Measure::Piccolo : Measure::Avelino;
              auto score = combined_estimate(g, m_, {avelino_t, tau_threshold});
              return py::make_tuple(score.value, score.order.people);
          },
          py::arg("graph"), py::arg("measure"), py::arg("avelino_t") = 0.5,
          py::arg("tau_threshold") = 10);

    m.def("generate_power_law_bipartite",
          [](std::size_t n_people, std::size_t n_tasks, double lambda_p, double lambda_t,
             int k_p, int k_t, std::uint64_t seed) {
              return generate_power_law_bipartite(
                  {n_people, n_tasks, lambda_p, lambda_t, k_p, k_t, seed});
          },
          py::arg("n_people"), py::arg("n_tasks"), py::arg("lambda_p") = 0.5,
          py::arg("lambda_t") = 0.5, py::arg("k_p") = 10, py::arg("k_t") = 10,
          py::arg("seed") = 0);
    m.def("generate_random_bipartite", [](std::size_t n, double p, std::uint64_t seed) {
        Rng rng(seed);
        return generate_random_bipartite(n, p, rng);
    });
}
