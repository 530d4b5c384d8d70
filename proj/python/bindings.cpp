#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "snort/io.hpp"
#include "snort/solver.hpp"
#include "snort/strategy.hpp"

namespace py = pybind11;
using namespace snort;

namespace {

GraphPtr family_graph(const std::string& family, int n) {
  return std::make_shared<const Graph>(build_family(parse_family(family), n));
}

std::vector<std::string> labels_of(const Graph& g, const std::vector<int>& vertices) {
  std::vector<std::string> out;
  for (int v : vertices) out.push_back(g.label(v).str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ResourceExhausted>(m, "ResourceExhausted", PyExc_RuntimeError);
  py::register_exception<NoStrategy>(m, "NoStrategy", PyExc_LookupError);

  m.def("families", [] {
    std::vector<std::string> out;
    for (Family f : all_families()) out.emplace_back(family_name(f));
    return out;
  });

  py::class_<Graph, std::shared_ptr<Graph>>(m, "Graph")
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("labels",
                             [](const Graph& g) {
                               std::vector<std::string> out;
                               for (const auto& l : g.labels()) out.push_back(l.str());
                               return out;
                             })
      .def_property_readonly("edges", &Graph::edges)
      .def("index_of", [](const Graph& g, const std::string& label) {
        return g.index_of(VertexLabel::parse(label));
      })
      .def("to_json", [](const Graph& g) { return graph_to_json(g).dump(); });

  m.def("build_family", [](const std::string& family, int n) {
    return std::const_pointer_cast<Graph>(family_graph(family, n));
  }, py::arg("family"), py::arg("n"));

  py::class_<Position>(m, "Position")
      .def_static("initial", [](const std::string& family, int n) {
        return Position::initial(family_graph(family, n));
      }, py::arg("family"), py::arg("n"))
      .def_property_readonly("alive", &Position::alive)
      .def_property_readonly("blue", &Position::blue)
      .def_property_readonly("red", &Position::red)
      .def_property_readonly("graph", [](const Position& p) {
        return std::const_pointer_cast<Graph>(p.graph_ptr());
      })
      .def("legal_moves", [](const Position& p, const std::string& player) {
        return p.legal_moves(parse_player(player));
      })
      .def("play", [](const Position& p, const std::string& player, py::object vertex) {
        const int v = py::isinstance<py::str>(vertex)
                          ? p.graph().index_of(VertexLabel::parse(vertex.cast<std::string>()))
                          : vertex.cast<int>();
        const Player who = parse_player(player);
        if (!p.is_legal(who, v)) throw InvalidArgument("illegal move");
        return p.apply_move(who, v);
      }, py::arg("player"), py::arg("vertex"))
      .def("to_json", [](const Position& p) { return position_to_json(p).dump(); });

  py::class_<Solver>(m, "Solver")
      .def(py::init([](bool memo, bool split_components) {
        SolverOptions options;
        options.memo = memo;
        options.split_components = split_components;
        return Solver(options);
      }), py::arg("memo") = true, py::arg("split_components") = false)
      .def("outcome", [](Solver& s, const Position& p) { return std::string(outcome_name(s.outcome(p))); })
      .def("wins_moving", [](Solver& s, const Position& p, const std::string& player) {
        return s.wins_moving(p, parse_player(player));
      })
      .def("best_moves", [](Solver& s, const Position& p, const std::string& player) {
        return labels_of(p.graph(), s.best_moves(p, parse_player(player)));
      });

  m.def("verify_copycat", [](const std::string& family, int n) {
    return report_to_json(verify_copycat(parse_family(family), n)).dump();
  }, py::arg("family"), py::arg("n"));
}
