// Independent oracles shared by the unit tests and the acceptance binary.
// None of them reuse the library's bit-level search, builders or mirror code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "snort/graph.hpp"
#include "snort/position.hpp"

namespace snort::testing {

/// Edge set of T_{n,m} enumerated straight from the three edge families:
/// horizontal, vertical and (i,j)-(i+1,j+1) diagonals, as coordinate pairs.
using Coord = std::pair<int, int>;
using CoordEdge = std::pair<Coord, Coord>;

inline std::set<CoordEdge> definition_edges(int n, int m) {
  std::set<CoordEdge> edges;
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i < n; ++i) edges.insert({{i, j}, {i + 1, j}});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < m; ++j) edges.insert({{i, j}, {i, j + 1}});
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < m; ++j) edges.insert({{i, j}, {i + 1, j + 1}});
  return edges;
}

/// Lattice position of a label: L at column 0, R at n+1, R' at n+2.
inline Coord lattice_coord(const VertexLabel& l, int n) {
  switch (l.kind) {
    case VertexLabel::Kind::Grid: return {l.column, l.row};
    case VertexLabel::Kind::L: return {0, l.row};
    case VertexLabel::Kind::R: return {n + 1, l.row};
    case VertexLabel::Kind::Rp: return {n + 2, l.row};
  }
  return {0, 0};
}

/// Two lattice points are adjacent in the triangulated lattice iff they
/// differ by (1,0), (0,1) or (1,1) up to sign.
inline bool lattice_adjacent(Coord a, Coord b) {
  const int dx = b.first - a.first, dy = b.second - a.second;
  return (std::abs(dx) + std::abs(dy) == 1) || (dx == dy && std::abs(dx) == 1);
}

/// Memo-free recursion straight from the rules, through the public
/// Position API.
inline bool brute_wins(const Position& p, Player mover) {
  for (int v : p.legal_moves(mover))
    if (!brute_wins(p.apply_move(mover, v), opponent(mover))) return true;
  return false;
}

inline Outcome brute_outcome(const Position& p) {
  return outcome_from(brute_wins(p, Player::Left), brute_wins(p, Player::Right));
}

/// Random simple graph on `size` vertices with edge probability `density`.
inline Graph random_graph(std::mt19937_64& rng, int size, double density) {
  std::vector<VertexLabel> labels;
  for (int i = 1; i <= size; ++i) labels.push_back(VertexLabel::grid(i, 1));
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < size; ++u)
    for (int v = u + 1; v < size; ++v)
      if (edge(rng)) edges.emplace_back(u, v);
  return Graph(std::move(labels), edges);
}

inline VertexSet random_subset(std::mt19937_64& rng, VertexSet of, double p = 0.5) {
  std::bernoulli_distribution pick(p);
  VertexSet out = 0;
  for_each_vertex(of, [&](int v) {
    if (pick(rng)) out |= bit(v);
  });
  return out;
}

/// Plays a few random legal moves from the initial position and sprinkles
/// extra tints, yielding a reachable-looking tinted position.
inline Position random_position(std::mt19937_64& rng, const GraphPtr& g) {
  Position p = Position::initial(g);
  std::uniform_int_distribution<int> plies(0, std::max(1, g->size() / 3));
  Player mover = std::bernoulli_distribution(0.5)(rng) ? Player::Left : Player::Right;
  for (int k = plies(rng); k > 0; --k) {
    const auto moves = p.legal_moves(mover);
    if (moves.empty()) break;
    p = p.apply_move(mover, moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)]);
    mover = opponent(mover);
  }
  p = p.apply_tint(Player::Left, random_subset(rng, p.alive() & ~p.red(), 0.15));
  p = p.apply_tint(Player::Right, random_subset(rng, p.alive() & ~p.blue(), 0.15));
  return p;
}

/// Brute-force isomorphism test between the subgraphs of `g` induced by
/// `a` and `b` (all permutations; intended for sets of at most 8).
inline bool brute_isomorphic(const Graph& g, VertexSet a, VertexSet b) {
  std::vector<int> va = to_list(a), vb = to_list(b);
  if (va.size() != vb.size()) return false;
  std::sort(vb.begin(), vb.end());
  do {
    bool ok = true;
    for (std::size_t x = 0; x < va.size() && ok; ++x)
      for (std::size_t y = x + 1; y < va.size() && ok; ++y)
        ok = g.adjacent(va[x], va[y]) == g.adjacent(vb[x], vb[y]);
    if (ok) return true;
  } while (std::next_permutation(vb.begin(), vb.end()));
  return false;
}

}  // namespace snort::testing
