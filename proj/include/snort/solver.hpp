#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "snort/graph.hpp"
#include "snort/position.hpp"
#include "snort/transposition_table.hpp"

namespace snort {

struct SolveStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t memo_entries = 0;
  double elapsed_seconds = 0.0;
};

enum class MoveOrder { Index, Greedy };

struct SolverOptions {
  bool memo = true;
  MoveOrder order = MoveOrder::Index;
  /// Expanded nodes allowed per top-level query.
  std::uint64_t node_cap = 500'000'000;
  /// Stored results allowed before ResourceExhausted.
  std::size_t memo_capacity = std::size_t{120'000'000};
  /// Peel off components only one player can move in and count them as
  /// spare moves.
  bool split_components = false;
};

/// Exact normal-play win/loss search for Snort with a transposition table.
///
/// The table lives as long as the solver and is reset whenever a position
/// over a structurally different graph is queried. Not thread-safe.
class Solver {
 public:
  explicit Solver(SolverOptions options = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  /// True iff `mover`, moving first, wins.
  bool wins_moving(const Position& position, Player mover);
  Outcome outcome(const Position& position);
  /// Legal moves after which the opponent, moving first, loses.
  std::vector<int> best_moves(const Position& position, Player mover);

  /// Accumulated over the solver's lifetime (elapsed covers query time).
  const SolveStats& stats() const { return stats_; }
  const SolverOptions& options() const { return options_; }
  void clear();

  class Engine;

 private:
  template <class F>
  auto run(const Position& position, F&& body);

  SolverOptions options_;
  SolveStats stats_;
  std::unique_ptr<Engine> engine_;
};

struct FamilySolution {
  Outcome outcome;
  SolveStats stats;
};

/// Outcome class of the empty graph of the given family.
FamilySolution solve_family(Family family, int n, SolverOptions options = {});

}  // namespace snort
