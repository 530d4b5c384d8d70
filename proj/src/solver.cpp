#include "snort/solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>

namespace snort {

namespace {

struct Key128 {
  std::uint64_t a = 0, b = 0;
  friend bool operator==(const Key128&, const Key128&) = default;
};

struct Key192 {
  std::uint64_t a = 0, b = 0, c = 0;
  friend bool operator==(const Key192&, const Key192&) = default;
};

struct HashKey {
  std::size_t operator()(std::uint64_t k) const { return mix64(k); }
  std::size_t operator()(const Key128& k) const { return mix64(k.a ^ mix64(k.b)); }
  std::size_t operator()(const Key192& k) const { return mix64(k.a ^ mix64(k.b ^ mix64(k.c))); }
};

// Two bit planes encode the four vertex states relative to the mover:
// dead 00, free 10, own-tinted 11, foe-tinted 01.
constexpr VertexSet playable_plane(const Board& b) { return b.alive & ~b.foe; }
constexpr VertexSet tinted_plane(const Board& b) { return b.own | b.foe; }

struct NarrowKeys {
  using Key = std::uint64_t;
  static Key make(const Board& b) { return (playable_plane(b) << 32) | tinted_plane(b); }
};
struct WideKeys {
  using Key = Key128;
  static Key make(const Board& b) { return {playable_plane(b), tinted_plane(b)}; }
};
struct NarrowSpareKeys {
  using Key = Key128;
  static Key make(const Board& b, int spare) {
    return {NarrowKeys::make(b), static_cast<std::uint64_t>(static_cast<std::int64_t>(spare))};
  }
};
struct WideSpareKeys {
  using Key = Key192;
  static Key make(const Board& b, int spare) {
    return {playable_plane(b), tinted_plane(b),
            static_cast<std::uint64_t>(static_cast<std::int64_t>(spare))};
  }
};

}  // namespace

class Solver::Engine {
 public:
  virtual ~Engine() = default;
  virtual bool wins(const Board& b) = 0;
  virtual std::size_t memo_size() const = 0;

  const std::vector<VertexSet>& adjacency() const { return adjacency_; }
  std::uint64_t query_nodes = 0;
  SolveStats* stats = nullptr;

 protected:
  std::vector<VertexSet> adjacency_;
};

namespace {

template <class Plain, class Spare>
class EngineImpl final : public Solver::Engine {
 public:
  EngineImpl(std::vector<VertexSet> adjacency, const SolverOptions& options, SolveStats* stats)
      : options_(options),
        plain_table_(options.memo_capacity),
        spare_table_(options.split_components ? options.memo_capacity : 0) {
    adjacency_ = std::move(adjacency);
    this->stats = stats;
  }

  bool wins(const Board& b) override {
    return options_.split_components ? search_spare(b, 0) : search(b);
  }

  std::size_t memo_size() const override { return plain_table_.size() + spare_table_.size(); }

 private:
  void count_node() {
    ++stats->nodes_expanded;
    if (++query_nodes > options_.node_cap)
      throw ResourceExhausted("node cap exceeded (" + std::to_string(options_.node_cap) + ")");
  }

  /// Fills `order` with the mover's moves in search order; returns count.
  int order_moves(const Board& b, std::array<int, kMaxVertices>& order) const {
    int count = 0;
    for_each_vertex(b.moves(), [&](int v) { order[count++] = v; });
    if (options_.order == MoveOrder::Greedy) {
      std::array<int, kMaxVertices> score{};
      for (int k = 0; k < count; ++k)
        score[order[k]] = __builtin_popcountll(adjacency_[order[k]] & b.alive & ~b.own);
      std::stable_sort(order.begin(), order.begin() + count,
                       [&](int x, int y) { return score[x] > score[y]; });
    }
    return count;
  }

  bool search(const Board& b) {
    if (b.moves() == 0) return false;
    typename Plain::Key key{};
    if (options_.memo) {
      key = Plain::make(b);
      if (auto hit = plain_table_.find(key)) {
        ++stats->memo_hits;
        return *hit;
      }
    }
    count_node();

    std::array<int, kMaxVertices> order;
    const int count = order_moves(b, order);
    std::array<Board, kMaxVertices> children;
    bool result = false;
    for (int k = 0; k < count && !result; ++k) {
      children[k] = play(b, order[k], adjacency_[order[k]]);
      if (children[k].moves() == 0) result = true;
    }
    for (int k = 0; k < count && !result; ++k)
      if (!search(children[k])) result = true;

    if (options_.memo) plain_table_.insert(key, result);
    return result;
  }

  /// `spare` counts moves the mover holds in peeled-off components minus the
  /// opponent's.
  bool search_spare(Board b, int spare) {
    for (VertexSet comp : components(b.alive)) {
      if ((comp & ~b.own) == 0) {
        spare += __builtin_popcountll(comp);
      } else if ((comp & ~b.foe) == 0) {
        spare -= __builtin_popcountll(comp);
      } else {
        continue;
      }
      b.alive &= ~comp;
      b.own &= ~comp;
      b.foe &= ~comp;
    }
    const int remaining = __builtin_popcountll(b.alive);
    if (spare > remaining) return true;
    if (-spare >= remaining) return false;
    if (b.moves() == 0) return spare > 0;

    typename Spare::Key key{};
    if (options_.memo) {
      key = Spare::make(b, spare);
      if (auto hit = spare_table_.find(key)) {
        ++stats->memo_hits;
        return *hit;
      }
    }
    count_node();

    std::array<int, kMaxVertices> order;
    const int count = order_moves(b, order);
    bool result = false;
    for (int k = 0; k < count && !result; ++k)
      if (!search_spare(play(b, order[k], adjacency_[order[k]]), -spare)) result = true;
    if (!result && spare > 0) result = !search_spare(Board{b.alive, b.foe, b.own}, -(spare - 1));

    if (options_.memo) spare_table_.insert(key, result);
    return result;
  }

  std::vector<VertexSet> components(VertexSet within) const {
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

  const SolverOptions options_;
  TranspositionTable<typename Plain::Key, HashKey> plain_table_;
  TranspositionTable<typename Spare::Key, HashKey> spare_table_;
};

std::vector<VertexSet> adjacency_of(const Graph& graph) {
  std::vector<VertexSet> rows(static_cast<std::size_t>(graph.size()));
  for (int v = 0; v < graph.size(); ++v) rows[v] = graph.neighbors(v);
  return rows;
}

}  // namespace

Solver::Solver(SolverOptions options) : options_(options) {}
Solver::~Solver() = default;
Solver::Solver(Solver&& other) noexcept
    : options_(other.options_), stats_(other.stats_), engine_(std::move(other.engine_)) {
  if (engine_) engine_->stats = &stats_;
}

Solver& Solver::operator=(Solver&& other) noexcept {
  options_ = other.options_;
  stats_ = other.stats_;
  engine_ = std::move(other.engine_);
  if (engine_) engine_->stats = &stats_;
  return *this;
}

void Solver::clear() {
  engine_.reset();
  stats_ = {};
}

template <class F>
auto Solver::run(const Position& position, F&& body) {
  auto adjacency = adjacency_of(position.graph());
  if (!engine_ || engine_->adjacency() != adjacency) {
    if (position.graph().size() <= 32)
      engine_ = std::make_unique<EngineImpl<NarrowKeys, NarrowSpareKeys>>(std::move(adjacency),
                                                                         options_, &stats_);
    else
      engine_ = std::make_unique<EngineImpl<WideKeys, WideSpareKeys>>(std::move(adjacency),
                                                                     options_, &stats_);
  }
  engine_->query_nodes = 0;
  const auto start = std::chrono::steady_clock::now();
  struct Timer {
    Solver* self;
    std::chrono::steady_clock::time_point start;
    ~Timer() {
      self->stats_.elapsed_seconds +=
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      self->stats_.memo_entries = self->engine_->memo_size();
    }
  } timer{this, start};
  return body(*engine_);
}

bool Solver::wins_moving(const Position& position, Player mover) {
  return run(position, [&](Engine& e) { return e.wins(position.board(mover)); });
}

Outcome Solver::outcome(const Position& position) {
  return run(position, [&](Engine& e) {
    const bool left = e.wins(position.board(Player::Left));
    const bool right = e.wins(position.board(Player::Right));
    return outcome_from(left, right);
  });
}

std::vector<int> Solver::best_moves(const Position& position, Player mover) {
  return run(position, [&](Engine& e) {
    std::vector<int> out;
    const Board b = position.board(mover);
    for_each_vertex(b.moves(), [&](int v) {
      if (!e.wins(play(b, v, e.adjacency()[v]))) out.push_back(v);
    });
    return out;
  });
}

FamilySolution solve_family(Family family, int n, SolverOptions options) {
  auto graph = std::make_shared<const Graph>(build_family(family, n));
  Solver solver(options);
  const Outcome outcome = solver.outcome(Position::initial(graph));
  return {outcome, solver.stats()};
}

}  // namespace snort
