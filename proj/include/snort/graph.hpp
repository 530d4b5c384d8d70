#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace snort {

/// Vertex sets are bit masks over a graph's deterministic vertex order.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

/// Iterate the members of a vertex set in ascending order.
template <class F>
constexpr void for_each_vertex(VertexSet set, F&& f) {
  while (set != 0) {
    const int v = __builtin_ctzll(set);
    set &= set - 1;
    f(v);
  }
}

std::vector<int> to_list(VertexSet set);
VertexSet to_set(const std::vector<int>& vertices);

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family {
  Path,
  T2,
  OneSlant2,
  T3,
  OneSlant3,
  LeftAddOneBoth3,
  BothAddOne3,
  RightAddOnly3,
  RightMinusOnly3,
  BothMinusOne3,
  Custom,  // graphs assembled from explicit edge lists (tests only)
};

/// Every named family, in declaration order (excludes Custom).
const std::vector<Family>& all_families();

std::string_view family_name(Family family);
/// Parse a lower-case family tag ("t2", "oneslant3", ...).
Family parse_family(std::string_view name);

/// Rows in the base grid of a family (1 for Path, 2 or 3 otherwise).
int family_rows(Family family);

/// A vertex name: grid coordinate (column, row), or one of the extra
/// end vertices L_row, R_row, R'_row that lie at columns 0, n+1 and n+2.
struct VertexLabel {
  enum class Kind : std::uint8_t { Grid, L, R, Rp };

  Kind kind = Kind::Grid;
  int column = 0;  // 1-based; unused (0) for L/R/Rp
  int row = 0;     // 1-based

  static constexpr VertexLabel grid(int column, int row) { return {Kind::Grid, column, row}; }
  static constexpr VertexLabel left(int row) { return {Kind::L, 0, row}; }
  static constexpr VertexLabel right(int row) { return {Kind::R, 0, row}; }
  static constexpr VertexLabel right_prime(int row) { return {Kind::Rp, 0, row}; }

  /// "g3_2", "L1", "R2", "R3p".
  std::string str() const;
  static VertexLabel parse(std::string_view text);

  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

/// Immutable simple graph of at most 64 vertices with labelled vertices.
class Graph {
 public:
  /// Builds a graph from labels and an undirected edge list. Rejects
  /// self-loops, out-of-range endpoints, duplicate labels and more than 64
  /// vertices.
  Graph(std::vector<VertexLabel> labels, const std::vector<std::pair<int, int>>& edges,
        Family family = Family::Custom, int n = 0);

  int size() const { return static_cast<int>(labels_.size()); }
  Family family() const { return family_; }
  int n() const { return n_; }

  const VertexLabel& label(int v) const;
  const std::vector<VertexLabel>& labels() const { return labels_; }
  std::optional<int> find(const VertexLabel& label) const;
  /// Like find() but throws InvalidArgument when the label is absent.
  int index_of(const VertexLabel& label) const;

  VertexSet neighbors(int v) const;
  bool adjacent(int u, int v) const { return (neighbors(u) & bit(v)) != 0; }
  VertexSet all() const;

  /// Edges (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  /// Connected components of the subgraph induced by `within`, ordered by
  /// smallest member.
  std::vector<VertexSet> components(VertexSet within) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<VertexLabel> labels_;
  std::vector<VertexSet> adjacency_;
  Family family_;
  int n_;
};

using GraphPtr = std::shared_ptr<const Graph>;

Graph build_path(int n);
Graph build_grid(int n, int m);
/// T2/T3 base grids and the corner-extended variants.
Graph build_variant(Family family, int n);
/// Any named family, including Path.
Graph build_family(Family family, int n);

}  // namespace snort
