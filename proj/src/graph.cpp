#include "snort/graph.hpp"

#include <algorithm>
#include <charconv>

namespace snort {

std::vector<int> to_list(VertexSet set) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(__builtin_popcountll(set)));
  for_each_vertex(set, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet to_set(const std::vector<int>& vertices) {
  VertexSet set = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw InvalidArgument("vertex index out of range");
    set |= bit(v);
  }
  return set;
}

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int rows;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::Path, "path", 1},
    {Family::T2, "t2", 2},
    {Family::OneSlant2, "oneslant2", 2},
    {Family::T3, "t3", 3},
    {Family::OneSlant3, "oneslant3", 3},
    {Family::LeftAddOneBoth3, "leftaddoneboth3", 3},
    {Family::BothAddOne3, "bothaddone3", 3},
    {Family::RightAddOnly3, "rightaddonly3", 3},
    {Family::RightMinusOnly3, "rightminusonly3", 3},
    {Family::BothMinusOne3, "bothminusone3", 3},
    {Family::Custom, "custom", 0},
};

const FamilyInfo& info(Family family) {
  for (const auto& f : kFamilies)
    if (f.family == family) return f;
  throw InvalidArgument("unknown family");
}

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw InvalidArgument("malformed vertex label");
  return value;
}

}  // namespace

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> out;
    for (const auto& f : kFamilies)
      if (f.family != Family::Custom) out.push_back(f.family);
    return out;
  }();
  return families;
}

std::string_view family_name(Family family) { return info(family).name; }

Family parse_family(std::string_view name) {
  for (const auto& f : kFamilies)
    if (f.name == name && f.family != Family::Custom) return f.family;
  throw InvalidArgument("unknown family: " + std::string(name));
}

int family_rows(Family family) { return info(family).rows; }

std::string VertexLabel::str() const {
  switch (kind) {
    case Kind::Grid:
      return "g" + std::to_string(column) + "_" + std::to_string(row);
    case Kind::L:
      return "L" + std::to_string(row);
    case Kind::R:
      return "R" + std::to_string(row);
    case Kind::Rp:
      return "R" + std::to_string(row) + "p";
  }
  return {};
}

VertexLabel VertexLabel::parse(std::string_view text) {
  if (text.size() >= 4 && text.front() == 'g') {
    auto sep = text.find('_');
    if (sep == std::string_view::npos) throw InvalidArgument("malformed vertex label");
    return grid(parse_int(text.substr(1, sep - 1)), parse_int(text.substr(sep + 1)));
  }
  if (text.size() >= 2 && text.front() == 'L') return left(parse_int(text.substr(1)));
  if (text.size() >= 2 && text.front() == 'R') {
    if (text.back() == 'p') return right_prime(parse_int(text.substr(1, text.size() - 2)));
    return right(parse_int(text.substr(1)));
  }
  throw InvalidArgument("malformed vertex label: " + std::string(text));
}

Graph::Graph(std::vector<VertexLabel> labels, const std::vector<std::pair<int, int>>& edges,
             Family family, int n)
    : labels_(std::move(labels)), family_(family), n_(n) {
  if (labels_.size() > static_cast<std::size_t>(kMaxVertices))
    throw InvalidArgument("graph exceeds 64 vertices");
  {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidArgument("duplicate vertex label");
  }
  adjacency_.assign(labels_.size(), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= size() || v >= size())
      throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("self-loop");
    adjacency_[u] |= bit(v);
    adjacency_[v] |= bit(u);
  }
}

const VertexLabel& Graph::label(int v) const {
  if (v < 0 || v >= size()) throw InvalidArgument("vertex index out of range");
  return labels_[v];
}

std::optional<int> Graph::find(const VertexLabel& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int Graph::index_of(const VertexLabel& label) const {
  if (auto v = find(label)) return *v;
  throw InvalidArgument("no vertex labelled " + label.str());
}

VertexSet Graph::neighbors(int v) const {
  if (v < 0 || v >= size()) throw InvalidArgument("vertex index out of range");
  return adjacency_[v];
}

VertexSet Graph::all() const {
  return size() == kMaxVertices ? ~VertexSet{0} : bit(size()) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for_each_vertex(adjacency_[u] & ~((bit(u) << 1) - 1),
                    [&](int v) { out.emplace_back(u, v); });
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : adjacency_) twice += __builtin_popcountll(row);
  return twice / 2;
}

std::vector<VertexSet> Graph::components(VertexSet within) const {
  within &= all();
  std::vector<VertexSet> out;
  while (within != 0) {
    VertexSet comp = within & -within;
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= adjacency_[v]; });
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    within &= ~comp;
  }
  return out;
}

namespace {

/// Incremental builder keyed by label; keeps the deterministic order by
/// requiring callers to add vertices in order.
class GraphBuilder {
 public:
  int add(VertexLabel label) {
    labels_.push_back(label);
    return static_cast<int>(labels_.size()) - 1;
  }
  void connect(VertexLabel a, VertexLabel b) { edges_.emplace_back(index(a), index(b)); }
  Graph finish(Family family, int n) && { return Graph(std::move(labels_), edges_, family, n); }

 private:
  int index(VertexLabel label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::logic_error("builder: unknown label " + label.str());
    return static_cast<int>(it - labels_.begin());
  }

  std::vector<VertexLabel> labels_;
  std::vector<std::pair<int, int>> edges_;
};

GraphBuilder grid_builder(int n, int m) {
  GraphBuilder b;
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i <= n; ++i) b.add(VertexLabel::grid(i, j));
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i < n; ++i) b.connect(VertexLabel::grid(i, j), VertexLabel::grid(i + 1, j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < m; ++j) b.connect(VertexLabel::grid(i, j), VertexLabel::grid(i, j + 1));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < m; ++j)
      b.connect(VertexLabel::grid(i, j), VertexLabel::grid(i + 1, j + 1));
  return b;
}

void check_size(long long n, long long m) {
  if (n < 1 || m < 1) throw InvalidArgument("grid dimensions must be positive");
  if (n * m > kMaxVertices) throw InvalidArgument("graph exceeds 64 vertices");
}

}  // namespace

Graph build_path(int n) {
  check_size(n, 1);
  return grid_builder(n, 1).finish(Family::Path, n);
}

Graph build_grid(int n, int m) {
  check_size(n, m);
  Family family = m == 2 ? Family::T2 : m == 3 ? Family::T3 : Family::Custom;
  if (m == 1) family = Family::Path;
  return grid_builder(n, m).finish(family, n);
}

Graph build_variant(Family family, int n) {
  using L = VertexLabel;
  const int rows = family == Family::Custom || family == Family::Path ? 0 : family_rows(family);
  if (rows == 0) throw InvalidArgument("build_variant: not a grid family");
  check_size(n, rows);  // the Graph constructor rejects the extras overflowing

  GraphBuilder b = grid_builder(n, rows);
  const auto g = [](int i, int j) { return L::grid(i, j); };

  switch (family) {
    case Family::T2:
    case Family::T3:
      break;
    case Family::OneSlant2:
      b.add(L::right(2));
      b.connect(g(n, 1), L::right(2));
      b.connect(g(n, 2), L::right(2));
      break;
    case Family::OneSlant3:
      b.add(L::right(2));
      b.add(L::right(3));
      b.add(L::right_prime(3));
      b.connect(g(n, 1), L::right(2));
      b.connect(g(n, 2), L::right(2));
      b.connect(g(n, 2), L::right(3));
      b.connect(g(n, 3), L::right(3));
      b.connect(L::right(2), L::right(3));
      b.connect(L::right(2), L::right_prime(3));
      b.connect(L::right(3), L::right_prime(3));
      break;
    case Family::LeftAddOneBoth3:
      b.add(L::left(1));
      b.add(L::right(2));
      b.add(L::right(3));
      b.connect(L::left(1), g(1, 1));
      b.connect(L::left(1), g(1, 2));
      b.connect(g(n, 1), L::right(2));
      b.connect(g(n, 2), L::right(2));
      b.connect(g(n, 2), L::right(3));
      b.connect(g(n, 3), L::right(3));
      b.connect(L::right(2), L::right(3));
      break;
    case Family::BothAddOne3:
      b.add(L::left(1));
      b.add(L::right(3));
      b.connect(L::left(1), g(1, 1));
      b.connect(L::left(1), g(1, 2));
      b.connect(g(n, 2), L::right(3));
      b.connect(g(n, 3), L::right(3));
      break;
    case Family::RightAddOnly3:
      b.add(L::right(3));
      b.connect(g(n, 2), L::right(3));
      b.connect(g(n, 3), L::right(3));
      break;
    case Family::RightMinusOnly3:
      b.add(L::right(2));
      b.add(L::right(3));
      b.connect(g(n, 1), L::right(2));
      b.connect(g(n, 2), L::right(2));
      b.connect(g(n, 2), L::right(3));
      b.connect(g(n, 3), L::right(3));
      b.connect(L::right(2), L::right(3));
      break;
    case Family::BothMinusOne3:
      b.add(L::left(1));
      b.add(L::left(2));
      b.add(L::right(2));
      b.add(L::right(3));
      b.connect(L::left(1), g(1, 1));
      b.connect(L::left(1), g(1, 2));
      b.connect(L::left(2), g(1, 2));
      b.connect(L::left(2), g(1, 3));
      b.connect(L::left(1), L::left(2));
      b.connect(g(n, 1), L::right(2));
      b.connect(g(n, 2), L::right(2));
      b.connect(g(n, 2), L::right(3));
      b.connect(g(n, 3), L::right(3));
      b.connect(L::right(2), L::right(3));
      break;
    case Family::Path:
    case Family::Custom:
      throw InvalidArgument("build_variant: not a grid family");
  }
  return std::move(b).finish(family, n);
}

Graph build_family(Family family, int n) {
  if (family == Family::Path) return build_path(n);
  return build_variant(family, n);
}

}  // namespace snort
