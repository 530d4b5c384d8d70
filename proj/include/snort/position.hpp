#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "snort/graph.hpp"

namespace snort {

/// Left colours blue, Right colours red.
enum class Player : std::uint8_t { Left, Right };

constexpr Player opponent(Player p) { return p == Player::Left ? Player::Right : Player::Left; }
std::string_view player_name(Player p);
Player parse_player(std::string_view name);

enum class Outcome : std::uint8_t { N, P, L, R };

std::string_view outcome_name(Outcome o);
Outcome parse_outcome(std::string_view name);
/// Outcome class of the colour-swapped game (L <-> R).
constexpr Outcome swap_colours(Outcome o) {
  return o == Outcome::L ? Outcome::R : o == Outcome::R ? Outcome::L : o;
}
constexpr Outcome outcome_from(bool left_wins_first, bool right_wins_first) {
  if (left_wins_first && right_wins_first) return Outcome::N;
  if (left_wins_first) return Outcome::L;
  if (right_wins_first) return Outcome::R;
  return Outcome::P;
}

class IllegalMove : public std::runtime_error {
 public:
  enum class Cause { OutOfRange, Dead, OpponentTinted };

  IllegalMove(Cause cause, int vertex);
  Cause cause() const { return cause_; }
  int vertex() const { return vertex_; }

 private:
  Cause cause_;
  int vertex_;
};

/// Mover-relative snapshot of a position: `own` holds tints in the mover's
/// colour, `foe` the opponent's. Invariants: own, foe are disjoint subsets of
/// alive.
struct Board {
  VertexSet alive = 0;
  VertexSet own = 0;
  VertexSet foe = 0;

  constexpr VertexSet moves() const { return alive & ~foe; }

  friend constexpr bool operator==(const Board&, const Board&) = default;
};

/// Claim `v` for the mover, tint its live neighbours, delete double-tinted
/// vertices, and return the result seen from the opponent's side.
/// `neighbors` must be the adjacency row of v. No legality check.
constexpr Board play(const Board& b, int v, VertexSet neighbors) {
  const VertexSet alive = b.alive & ~bit(v);
  // Masking with `alive` also drops v's own tint when v was own-tinted; a
  // stale bit there would alias a live foe-tinted vertex in memo keys.
  const VertexSet own = (b.own | neighbors) & alive;
  const VertexSet foe = b.foe & alive;
  const VertexSet both = own & foe;
  return Board{alive & ~both, foe & ~both, own & ~both};
}

/// Key for the transposition table: equal keys denote the same game from the
/// mover's point of view, so colour-swapped positions with swapped movers
/// collide.
struct CanonicalKey {
  VertexSet alive = 0;
  VertexSet friendly = 0;
  VertexSet enemy = 0;

  friend constexpr bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

/// An immutable Snort position over a shared graph. Claimed vertices and
/// vertices tinted in both colours are not alive.
class Position {
 public:
  static Position initial(GraphPtr graph);
  /// Builds a position from raw sets. Tints are restricted to `alive`, and
  /// vertices tinted both colours are deleted.
  Position(GraphPtr graph, VertexSet alive, VertexSet blue, VertexSet red);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  VertexSet alive() const { return alive_; }
  VertexSet blue() const { return blue_; }
  VertexSet red() const { return red_; }
  VertexSet tint(Player p) const { return p == Player::Left ? blue_ : red_; }
  bool empty() const { return alive_ == 0; }

  VertexSet legal_set(Player player) const { return alive_ & ~tint(opponent(player)); }
  /// Ascending vertex indices.
  std::vector<int> legal_moves(Player player) const { return to_list(legal_set(player)); }
  bool is_legal(Player player, int v) const;

  /// Throws IllegalMove.
  Position apply_move(Player player, int v) const;
  /// Tint `vertices` (must be alive) in the player's colour.
  Position apply_tint(Player player, VertexSet vertices) const;

  std::vector<VertexSet> components() const { return graph_->components(alive_); }
  CanonicalKey canonical_key(Player mover) const;
  Board board(Player mover) const;
  Position colour_swapped() const { return Position(graph_, alive_, red_, blue_); }

  /// Same graph object and same sets.
  friend bool operator==(const Position& a, const Position& b) {
    return a.graph_ == b.graph_ && a.alive_ == b.alive_ && a.blue_ == b.blue_ && a.red_ == b.red_;
  }

 private:
  GraphPtr graph_;
  VertexSet alive_ = 0;
  VertexSet blue_ = 0;
  VertexSet red_ = 0;
};

Position initial_position(GraphPtr graph);

}  // namespace snort

template <>
struct std::hash<snort::CanonicalKey> {
  std::size_t operator()(const snort::CanonicalKey& k) const noexcept {
    std::uint64_t h = k.alive * 0x9E3779B97F4A7C15ULL;
    h ^= (k.friendly + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    h ^= (k.enemy + 0x165667B19E3779F9ULL) * 0xD6E8FEB86659FD93ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};
