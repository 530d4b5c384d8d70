#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "snort/graph.hpp"
#include "snort/position.hpp"
#include "snort/solver.hpp"
#include "snort/strategy.hpp"

namespace snort {

using json = nlohmann::json;

/// Graphviz text. With a position, removed vertices are dashed grey and
/// tinted vertices are filled light blue / light red.
std::string export_dot(const Graph& graph, const Position* position = nullptr);

/// {"family", "n", "vertices": [labels], "edges": [[u, v], ...]}
json graph_to_json(const Graph& graph);

/// {"alive": [...], "blue": [...], "red": [...]} as vertex indices.
json position_to_json(const Position& position);
/// Throws InvalidArgument on malformed input.
Position position_from_json(GraphPtr graph, const json& doc);

json labels_to_json(const Graph& graph, VertexSet vertices);
json stats_to_json(const SolveStats& stats);

struct SolveReport {
  Family family = Family::T2;
  int n = 0;
  Outcome outcome = Outcome::P;
  std::vector<VertexLabel> best_left;
  std::vector<VertexLabel> best_right;
  SolveStats stats;
};

/// Solves the empty graph of (family, n) and collects best first moves for
/// both players.
SolveReport solve_report(Family family, int n, const SolverOptions& options);

/// {"family", "n", "outcome", "best_first_moves": {"Left", "Right"}, "stats"}
json solve_report_to_json(const SolveReport& report);

json report_to_json(const VerificationReport& report);

}  // namespace snort
