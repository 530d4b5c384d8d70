#include "snort/position.hpp"

#include <string>

namespace snort {

std::string_view player_name(Player p) { return p == Player::Left ? "Left" : "Right"; }

Player parse_player(std::string_view name) {
  if (name == "Left" || name == "left" || name == "L") return Player::Left;
  if (name == "Right" || name == "right" || name == "R") return Player::Right;
  throw InvalidArgument("unknown player: " + std::string(name));
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::N: return "N";
    case Outcome::P: return "P";
    case Outcome::L: return "L";
    case Outcome::R: return "R";
  }
  return "?";
}

Outcome parse_outcome(std::string_view name) {
  if (name == "N") return Outcome::N;
  if (name == "P") return Outcome::P;
  if (name == "L") return Outcome::L;
  if (name == "R") return Outcome::R;
  throw InvalidArgument("unknown outcome: " + std::string(name));
}

namespace {

const char* cause_text(IllegalMove::Cause cause) {
  switch (cause) {
    case IllegalMove::Cause::OutOfRange: return "vertex out of range";
    case IllegalMove::Cause::Dead: return "vertex already removed";
    case IllegalMove::Cause::OpponentTinted: return "vertex tinted in the opponent's colour";
  }
  return "illegal move";
}

}  // namespace

IllegalMove::IllegalMove(Cause cause, int vertex)
    : std::runtime_error(std::string("illegal move at ") + std::to_string(vertex) + ": " +
                         cause_text(cause)),
      cause_(cause),
      vertex_(vertex) {}

Position Position::initial(GraphPtr graph) {
  const VertexSet all = graph->all();
  return Position(std::move(graph), all, 0, 0);
}

Position initial_position(GraphPtr graph) { return Position::initial(std::move(graph)); }

Position::Position(GraphPtr graph, VertexSet alive, VertexSet blue, VertexSet red)
    : graph_(std::move(graph)) {
  if (!graph_) throw InvalidArgument("position requires a graph");
  const VertexSet universe = graph_->all();
  if (((alive | blue | red) & ~universe) != 0) throw InvalidArgument("vertex index out of range");
  const VertexSet both = blue & red;
  alive_ = alive & ~both;
  blue_ = blue & alive_;
  red_ = red & alive_;
}

bool Position::is_legal(Player player, int v) const {
  return v >= 0 && v < graph_->size() && (legal_set(player) & bit(v)) != 0;
}

Position Position::apply_move(Player player, int v) const {
  if (v < 0 || v >= graph_->size()) throw IllegalMove(IllegalMove::Cause::OutOfRange, v);
  if ((alive_ & bit(v)) == 0) throw IllegalMove(IllegalMove::Cause::Dead, v);
  if ((tint(opponent(player)) & bit(v)) != 0)
    throw IllegalMove(IllegalMove::Cause::OpponentTinted, v);
  const Board after = play(board(player), v, graph_->neighbors(v));
  // `after` is seen from the opponent: its own tints are the opponent's colour.
  return player == Player::Left ? Position(graph_, after.alive, after.foe, after.own)
                                : Position(graph_, after.alive, after.own, after.foe);
}

Position Position::apply_tint(Player player, VertexSet vertices) const {
  if ((vertices & ~graph_->all()) != 0) throw InvalidArgument("vertex index out of range");
  if ((vertices & ~alive_) != 0) throw InvalidArgument("cannot tint a removed vertex");
  return player == Player::Left ? Position(graph_, alive_, blue_ | vertices, red_)
                                : Position(graph_, alive_, blue_, red_ | vertices);
}

CanonicalKey Position::canonical_key(Player mover) const {
  return CanonicalKey{alive_, tint(mover), tint(opponent(mover))};
}

Board Position::board(Player mover) const {
  return Board{alive_, tint(mover), tint(opponent(mover))};
}

}  // namespace snort
