#include "snort/strategy.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace snort {

StrategyBreach::StrategyBreach(int vertex)
    : std::runtime_error("adversary moved at " + std::to_string(vertex) +
                         ", outside the mirrored components"),
      vertex_(vertex) {}

namespace {

using Label = VertexLabel;

/// Lattice coordinates to labels: column 0 is L, n+1 is R, n+2 is R'.
Label at(int n, int column, int row) {
  if (column == 0) return Label::left(row);
  if (column == n + 1) return Label::right(row);
  if (column == n + 2) return Label::right_prime(row);
  return Label::grid(column, row);
}

std::map<int, Label> overrides_for(Family family) {
  const Label centre = Label::grid(1, 2);
  switch (family) {
    case Family::T2:
    case Family::OneSlant2:
      return {{1, Label::grid(1, 1)}, {2, Label::grid(2, 2)}};
    case Family::T3:
    case Family::OneSlant3:
    case Family::BothAddOne3:
    case Family::BothMinusOne3:
      return {{1, centre}};
    case Family::LeftAddOneBoth3:
      return {{1, centre}, {2, Label::grid(2, 2)}};
    case Family::RightAddOnly3:
      return {{1, centre}, {2, Label::grid(2, 2)}};
    case Family::RightMinusOnly3:
      return {};
    case Family::Path:
    case Family::Custom:
      break;
  }
  throw NoStrategy("no strategy is encoded for family " + std::string(family_name(family)));
}

/// The generic first move; valid for n at or above the threshold.
Label generic_move(Family family, int n) {
  const int half = n / 2;
  const int mid = (n + 1) / 2;  // ceil(n/2)
  const bool odd = n % 2 == 1;
  switch (family) {
    case Family::T2:
    case Family::OneSlant2:
      return odd ? Label::grid(mid, 1) : Label::grid(half + 1, 2);
    default:
      return odd ? Label::grid(mid, 2) : Label::grid(half + 1, 2);
  }
}

void check_supported(Family family, int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  (void)split_threshold(family);
  if (family == Family::RightMinusOnly3 && n % 2 == 1)
    throw NoStrategy(
        "no proven strategy for rightminusonly3 with odd n: only computational evidence "
        "indicates a first player win");
}

SplitSpec generic_split(Family family, int n) {
  SplitSpec spec;
  spec.family = family;
  spec.n = n;
  spec.parity = parity_of(n);
  spec.prescribed_move = generic_move(family, n);
  spec.small_n_overrides = overrides_for(family);

  const int k = n / 2;        // even n
  const int c = (n + 1) / 2;  // odd n
  const auto v = [n](int column, int row) { return at(n, column, row); };
  auto& ignore = spec.ignored_vertices;
  auto& cut = spec.ignored_edges;
  const bool odd = spec.parity == Parity::Odd;

  switch (family) {
    case Family::T2:
      if (odd)
        ignore = {v(c, 1), v(c, 2)};
      else
        ignore = {v(k, 1), v(k, 2), v(k + 1, 1), v(k + 1, 2)};
      break;
    case Family::OneSlant2:
      if (odd) {
        ignore = {v(c, 1)};
        cut = {{v(c, 2), v(c + 1, 2)}};
      } else {
        ignore = {v(k + 1, 2)};
        cut = {{v(k, 1), v(k + 1, 1)}};
      }
      break;
    case Family::T3:
      if (odd)
        ignore = {v(c, 1), v(c, 2), v(c, 3)};
      else
        ignore = {v(k, 1), v(k, 2), v(k + 1, 2), v(k + 1, 3)};
      break;
    case Family::LeftAddOneBoth3:
      if (odd)
        ignore = {v(c - 1, 1), v(c, 1), v(c, 2), v(c + 1, 2), v(c, 3), v(c + 1, 3)};
      else
        ignore = {v(k, 1), v(k + 1, 2), v(k + 1, 3)};
      break;
    case Family::BothAddOne3:
    case Family::BothMinusOne3:
      if (odd) {
        ignore = {v(c, 2)};
        cut = {{v(c - 1, 1), v(c, 1)}, {v(c, 3), v(c + 1, 3)}};
      } else {
        ignore = {v(k, 1), v(k, 2), v(k + 1, 2), v(k + 1, 3)};
      }
      break;
    case Family::OneSlant3:
      if (odd) {
        // Printed with n/2 on odd n; this is the reading centred on the move.
        ignore = {v(c, 1), v(c, 2), v(c + 1, 2), v(c + 1, 3)};
      } else {
        ignore = {v(k + 1, 2)};
        cut = {{v(k, 1), v(k + 1, 1)}, {v(k + 1, 3), v(k + 2, 3)}};
      }
      break;
    case Family::RightAddOnly3:
      if (odd) {
        ignore = {v(c, 2), v(c, 1)};
        cut = {{v(c, 3), v(c + 1, 3)}};
      } else {
        ignore = {v(k, 1), v(k, 2), v(k + 1, 1), v(k + 1, 2), v(k + 1, 3)};
      }
      break;
    case Family::RightMinusOnly3:
      ignore = {v(k, 1), v(k + 1, 1), v(k + 1, 2), v(k + 1, 3)};
      break;
    case Family::Path:
    case Family::Custom:
      throw NoStrategy("no strategy is encoded for this family");
  }
  return spec;
}

}  // namespace

int split_threshold(Family family) {
  switch (family) {
    case Family::T2:
    case Family::OneSlant2:
    case Family::LeftAddOneBoth3:
    case Family::RightAddOnly3:
      return 3;
    case Family::T3:
    case Family::OneSlant3:
    case Family::BothAddOne3:
    case Family::BothMinusOne3:
    case Family::RightMinusOnly3:
      return 2;
    case Family::Path:
    case Family::Custom:
      break;
  }
  throw NoStrategy("no strategy is encoded for family " + std::string(family_name(family)));
}

bool has_strategy(Family family, int n) {
  try {
    check_supported(family, n);
    return true;
  } catch (const NoStrategy&) {
    return false;
  } catch (const InvalidArgument&) {
    return false;
  }
}

VertexLabel prescribed_move(Family family, int n) {
  check_supported(family, n);
  if (n < split_threshold(family)) return overrides_for(family).at(n);
  return generic_move(family, n);
}

std::vector<VertexLabel> prescribed_alternatives(Family family, int n) {
  std::vector<VertexLabel> out{prescribed_move(family, n)};
  if (family == Family::T2 && n % 2 == 1 && n >= split_threshold(family))
    out.push_back(Label::grid((n + 1) / 2, 2));
  return out;
}

SplitSpec split_spec(Family family, int n) {
  check_supported(family, n);
  if (n < split_threshold(family))
    throw BelowThreshold("n=" + std::to_string(n) + " is below the split threshold of " +
                         std::string(family_name(family)) + "; use small_n_overrides");
  return generic_split(family, n);
}

std::vector<SplitSpec> split_spec_candidates(Family family, int n) {
  std::vector<SplitSpec> out{split_spec(family, n)};
  if (family == Family::OneSlant3 && n % 2 == 1) {
    SplitSpec alt = out.front();
    const int c = (n + 1) / 2;
    alt.ignored_vertices = {at(n, c - 1, 1), at(n, c - 1, 2), at(n, c, 2), at(n, c, 3)};
    out.push_back(std::move(alt));
  }
  return out;
}

namespace {

std::vector<VertexSet> components_of(const std::vector<VertexSet>& adjacency, VertexSet within) {
  std::vector<VertexSet> out;
  while (within != 0) {
    VertexSet comp = within & -within;
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= adjacency[v]; });
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    within &= ~comp;
  }
  return out;
}

/// Backtracking isomorphism search from `from` onto `to`, trying targets in
/// ascending index order for sources in ascending order.
bool find_isomorphism(const std::vector<VertexSet>& adjacency, const std::vector<int>& from,
                      VertexSet to, std::vector<int>& image, std::size_t depth, VertexSet used) {
  if (depth == from.size()) return true;
  const int a = from[depth];
  const int degree = __builtin_popcountll(adjacency[a]);
  bool found = false;
  for_each_vertex(to & ~used, [&](int b) {
    if (found || __builtin_popcountll(adjacency[b]) != degree) return;
    for (std::size_t k = 0; k < depth; ++k) {
      const bool lhs = (adjacency[a] & bit(from[k])) != 0;
      const bool rhs = (adjacency[b] & bit(image[from[k]])) != 0;
      if (lhs != rhs) return;
    }
    image[a] = b;
    if (find_isomorphism(adjacency, from, to, image, depth + 1, used | bit(b)))
      found = true;
    else
      image[a] = -1;
  });
  return found;
}

}  // namespace

MirrorMap derive_mirror(const Position& position, const SplitSpec& spec, Player strategist) {
  const Graph& graph = position.graph();
  const VertexSet own_tint = position.tint(strategist);
  const VertexSet foe_tint = position.tint(opponent(strategist));

  VertexSet ignored = 0;
  for (const auto& label : spec.ignored_vertices) {
    const int v = graph.index_of(label);
    const bool claimed_or_dead = (position.alive() & bit(v)) == 0;
    if (!claimed_or_dead && (own_tint & bit(v)) == 0)
      throw SpecViolation("ignored vertex " + label.str() +
                          " is neither removed nor tinted in the strategist's colour");
    ignored |= bit(v);
  }

  std::vector<VertexSet> adjacency(static_cast<std::size_t>(graph.size()));
  const VertexSet remaining = position.alive() & ~ignored;
  for (int v = 0; v < graph.size(); ++v) adjacency[v] = graph.neighbors(v) & remaining;
  for (const auto& [x, y] : spec.ignored_edges) {
    const int u = graph.index_of(x);
    const int w = graph.index_of(y);
    if (!graph.adjacent(u, w))
      throw SpecViolation("ignored edge " + x.str() + "-" + y.str() + " is not an edge");
    for (int end : {u, w})
      if ((position.alive() & bit(end)) != 0 && (own_tint & bit(end)) == 0)
        throw SpecViolation("ignored edge endpoint " + graph.label(end).str() +
                            " is not tinted in the strategist's colour");
    adjacency[u] &= ~bit(w);
    adjacency[w] &= ~bit(u);
  }
  for (int v = 0; v < graph.size(); ++v)
    if ((remaining & bit(v)) == 0) adjacency[v] = 0;

  if ((remaining & foe_tint) != 0)
    throw SpecViolation("split components carry tint in the adversary's colour");

  const auto comps = components_of(adjacency, remaining);
  if (comps.size() < 2 || comps.size() % 2 != 0)
    throw SpecViolation("split leaves " + std::to_string(comps.size()) +
                        " components instead of two isomorphic halves");

  MirrorMap mirror;
  mirror.partner.assign(static_cast<std::size_t>(graph.size()), -1);
  std::vector<int> image(static_cast<std::size_t>(graph.size()), -1);

  // Two components are mirrored directly. More (small n can shatter the
  // halves) are paired up greedily, each with the first isomorphic
  // unpaired component after it.
  std::vector<bool> paired(comps.size(), false);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (paired[i]) continue;
    const std::vector<int> from = to_list(comps[i]);
    bool matched = false;
    for (std::size_t j = i + 1; j < comps.size() && !matched; ++j) {
      if (paired[j] || __builtin_popcountll(comps[i]) != __builtin_popcountll(comps[j])) continue;
      if (!find_isomorphism(adjacency, from, comps[j], image, 0, 0)) continue;
      paired[i] = paired[j] = matched = true;
      mirror.first |= comps[i];
      mirror.second |= comps[j];
      for (int a : from) {
        mirror.partner[a] = image[a];
        mirror.partner[image[a]] = a;
      }
    }
    if (!matched) throw SpecViolation("split components are not isomorphic");
  }
  for_each_vertex(mirror.first, [&](int a) { mirror.pairs.emplace_back(a, mirror.partner[a]); });
  return mirror;
}

int copycat_response(const MirrorMap& mirror, int opponent_move) {
  if (!mirror.contains(opponent_move)) throw StrategyBreach(opponent_move);
  return mirror.partner[opponent_move];
}

namespace {

struct PositionSetsHash {
  std::size_t operator()(const std::tuple<VertexSet, VertexSet, VertexSet>& t) const {
    return mix64(std::get<0>(t) ^ mix64(std::get<1>(t) ^ mix64(std::get<2>(t))));
  }
};

class CopycatExplorer {
 public:
  CopycatExplorer(const MirrorMap& mirror, VerificationReport& report)
      : mirror_(mirror), report_(report) {}

  /// Explores every adversary line from `position` (adversary to move).
  /// Returns false on the first breach, leaving the line in `trace_`.
  bool explore(const Position& position, int depth) {
    report_.max_depth = std::max(report_.max_depth, depth);
    if (!visited_.emplace(position.alive(), position.blue(), position.red()).second) return true;
    const VertexSet replies = position.legal_set(Player::Right);
    if (replies == 0) {
      ++report_.lines_explored;
      return true;
    }
    bool ok = true;
    for_each_vertex(replies, [&](int r) {
      if (!ok) return;
      const Graph& graph = position.graph();
      trace_.push_back(graph.label(r));
      const Position after = position.apply_move(Player::Right, r);
      if (!mirror_.contains(r)) {
        report_.detail = "adversary move " + graph.label(r).str() + " lies outside both halves";
        ok = false;
        return;
      }
      const int answer = copycat_response(mirror_, r);
      trace_.push_back(graph.label(answer));
      if (!after.is_legal(Player::Left, answer)) {
        report_.detail = "copycat answer " + graph.label(answer).str() + " is illegal";
        ok = false;
        return;
      }
      if (!explore(after.apply_move(Player::Left, answer), depth + 2)) {
        ok = false;
        return;
      }
      trace_.pop_back();
      trace_.pop_back();
    });
    return ok;
  }

  std::vector<VertexLabel> trace_;

 private:
  const MirrorMap& mirror_;
  VerificationReport& report_;
  std::unordered_set<std::tuple<VertexSet, VertexSet, VertexSet>, PositionSetsHash> visited_;
};

}  // namespace

VerificationReport verify_split(const SplitSpec& spec) {
  VerificationReport report;
  report.family = spec.family;
  report.n = spec.n;
  report.method = VerificationReport::Method::Copycat;
  report.first_move = spec.prescribed_move;

  auto graph = std::make_shared<const Graph>(build_family(spec.family, spec.n));
  const int first = graph->index_of(spec.prescribed_move);
  const Position start = Position::initial(graph).apply_move(Player::Left, first);

  MirrorMap mirror;
  try {
    mirror = derive_mirror(start, spec, Player::Left);
  } catch (const SpecViolation& e) {
    report.verdict = VerificationReport::Verdict::Fail;
    report.failure_trace = std::vector<VertexLabel>{spec.prescribed_move};
    report.detail = e.what();
    return report;
  }

  CopycatExplorer explorer(mirror, report);
  explorer.trace_.push_back(spec.prescribed_move);
  report.max_depth = 1;
  if (explorer.explore(start, 1)) {
    report.verdict = VerificationReport::Verdict::Win;
  } else {
    report.verdict = VerificationReport::Verdict::Fail;
    report.failure_trace = explorer.trace_;
  }
  return report;
}

VerificationReport verify_copycat(Family family, int n, SolverOptions options) {
  const VertexLabel first = prescribed_move(family, n);
  if (n >= split_threshold(family)) return verify_split(split_spec(family, n));

  VerificationReport report;
  report.family = family;
  report.n = n;
  report.method = VerificationReport::Method::SolverCheck;
  report.first_move = first;
  auto graph = std::make_shared<const Graph>(build_family(family, n));
  Solver solver(options);
  const auto best = solver.best_moves(Position::initial(graph), Player::Left);
  const int move = graph->index_of(first);
  if (std::find(best.begin(), best.end(), move) != best.end()) {
    report.verdict = VerificationReport::Verdict::Win;
    report.detail = "small-n move confirmed by exhaustive search";
  } else {
    report.verdict = VerificationReport::Verdict::Fail;
    report.failure_trace = std::vector<VertexLabel>{first};
    report.detail = "small-n move is not a winning first move";
  }
  return report;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<VertexLabel> labels;
  for (int v = 0; v < a.size(); ++v) labels.push_back(VertexLabel::grid(v + 1, 1));
  for (int v = 0; v < b.size(); ++v) labels.push_back(VertexLabel::grid(v + 1, 2));
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.size(), v + a.size());
  return Graph(std::move(labels), edges);
}

bool check_symmetric_union(const Graph& g, VertexSet tint, Player tint_colour) {
  if (g.size() > 8) throw InvalidArgument("check_symmetric_union expects at most 8 vertices");
  if ((tint & ~g.all()) != 0) throw InvalidArgument("tint outside the graph");
  auto both = std::make_shared<const Graph>(disjoint_union(g, g));
  const Position position = Position::initial(both).apply_tint(tint_colour, tint);
  Solver solver;
  return solver.wins_moving(position, opponent(tint_colour));
}

}  // namespace snort
