#include "snort/io.hpp"

#include <sstream>

namespace snort {

std::string export_dot(const Graph& graph, const Position* position) {
  std::ostringstream out;
  out << "graph snort {\n";
  for (int v = 0; v < graph.size(); ++v) {
    const VertexLabel& label = graph.label(v);
    out << "  " << label.str();
    if (position != nullptr) {
      if ((position->alive() & bit(v)) == 0)
        out << " [style=\"filled,dashed\", fillcolor=\"gray80\"]";
      else if ((position->blue() & bit(v)) != 0)
        out << " [style=filled, fillcolor=\"lightblue\"]";
      else if ((position->red() & bit(v)) != 0)
        out << " [style=filled, fillcolor=\"lightpink\"]";
    }
    out << ";\n";
  }
  for (auto [u, v] : graph.edges())
    out << "  " << graph.label(u).str() << " -- " << graph.label(v).str() << ";\n";
  out << "}\n";
  return out.str();
}

json graph_to_json(const Graph& graph) {
  json vertices = json::array();
  for (const auto& label : graph.labels()) vertices.push_back(label.str());
  json edges = json::array();
  for (auto [u, v] : graph.edges()) edges.push_back({u, v});
  return {{"family", family_name(graph.family())},
          {"n", graph.n()},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)}};
}

json position_to_json(const Position& position) {
  return {{"alive", to_list(position.alive())},
          {"blue", to_list(position.blue())},
          {"red", to_list(position.red())}};
}

namespace {

VertexSet set_field(const json& doc, const char* key, int size) {
  if (!doc.contains(key) || !doc.at(key).is_array())
    throw InvalidArgument(std::string("position JSON needs array field '") + key + "'");
  VertexSet set = 0;
  for (const auto& item : doc.at(key)) {
    if (!item.is_number_integer()) throw InvalidArgument("vertex indices must be integers");
    const int v = item.get<int>();
    if (v < 0 || v >= size) throw InvalidArgument("vertex index out of range");
    set |= bit(v);
  }
  return set;
}

}  // namespace

Position position_from_json(GraphPtr graph, const json& doc) {
  if (!doc.is_object()) throw InvalidArgument("position JSON must be an object");
  const int size = graph->size();
  const VertexSet alive = set_field(doc, "alive", size);
  const VertexSet blue = set_field(doc, "blue", size);
  const VertexSet red = set_field(doc, "red", size);
  if (((blue | red) & ~alive) != 0) throw InvalidArgument("tinted vertices must be alive");
  if ((blue & red) != 0) throw InvalidArgument("a vertex cannot carry both tints");
  return Position(std::move(graph), alive, blue, red);
}

json labels_to_json(const Graph& graph, VertexSet vertices) {
  json out = json::array();
  for_each_vertex(vertices, [&](int v) { out.push_back(graph.label(v).str()); });
  return out;
}

json stats_to_json(const SolveStats& stats) {
  return {{"nodes_expanded", stats.nodes_expanded},
          {"memo_hits", stats.memo_hits},
          {"memo_entries", stats.memo_entries},
          {"elapsed_seconds", stats.elapsed_seconds}};
}

SolveReport solve_report(Family family, int n, const SolverOptions& options) {
  auto graph = std::make_shared<const Graph>(build_family(family, n));
  const Position start = Position::initial(graph);
  Solver solver(options);
  SolveReport report;
  report.family = family;
  report.n = n;
  report.outcome = solver.outcome(start);
  for (int v : solver.best_moves(start, Player::Left)) report.best_left.push_back(graph->label(v));
  for (int v : solver.best_moves(start, Player::Right))
    report.best_right.push_back(graph->label(v));
  report.stats = solver.stats();
  return report;
}

namespace {

json label_list(const std::vector<VertexLabel>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(l.str());
  return out;
}

}  // namespace

json solve_report_to_json(const SolveReport& report) {
  return {{"family", family_name(report.family)},
          {"n", report.n},
          {"outcome", outcome_name(report.outcome)},
          {"best_first_moves",
           {{"Left", label_list(report.best_left)}, {"Right", label_list(report.best_right)}}},
          {"stats", stats_to_json(report.stats)}};
}

json report_to_json(const VerificationReport& report) {
  json doc = {
      {"family", family_name(report.family)},
      {"n", report.n},
      {"method", report.method == VerificationReport::Method::Copycat ? "copycat" : "solver_check"},
      {"first_move", report.first_move.str()},
      {"lines_explored", report.lines_explored},
      {"max_depth", report.max_depth},
      {"verdict", report.verdict == VerificationReport::Verdict::Win ? "win" : "fail"},
      {"failure_trace", nullptr},
      {"detail", report.detail},
  };
  if (report.failure_trace) doc["failure_trace"] = label_list(*report.failure_trace);
  return doc;
}

}  // namespace snort
