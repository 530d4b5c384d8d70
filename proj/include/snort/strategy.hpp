#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snort/graph.hpp"
#include "snort/position.hpp"
#include "snort/solver.hpp"

namespace snort {

/// No proven first-player strategy is encoded for this (family, n).
class NoStrategy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// n lies below the family's generic split construction; the small-n
/// override move applies instead and is checked by the solver.
class BelowThreshold : public NoStrategy {
 public:
  using NoStrategy::NoStrategy;
};

/// A split table entry contradicts the real graph (wrong tinting, wrong
/// component count, non-isomorphic halves).
class SpecViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The adversary moved outside the mirrored components.
class StrategyBreach : public std::runtime_error {
 public:
  explicit StrategyBreach(int vertex);
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

enum class Parity { Odd, Even };

constexpr Parity parity_of(int n) { return n % 2 == 0 ? Parity::Even : Parity::Odd; }

/// One-hand-tied split for the first player (Left): claim
/// `prescribed_move`, then treat `ignored_vertices` and `ignored_edges` as
/// absent so that two mirror-image components remain.
struct SplitSpec {
  Family family = Family::T2;
  int n = 0;
  Parity parity = Parity::Odd;
  VertexLabel prescribed_move;
  std::vector<VertexLabel> ignored_vertices;
  std::vector<std::pair<VertexLabel, VertexLabel>> ignored_edges;
  /// Moves for n below the generic threshold of this family.
  std::map<int, VertexLabel> small_n_overrides;
};

/// Smallest n for which the family's generic split applies. Throws
/// NoStrategy for families without an encoded strategy.
int split_threshold(Family family);

/// True if a first move is encoded for (family, n), either generic or as a
/// small-n override.
bool has_strategy(Family family, int n);

VertexLabel prescribed_move(Family family, int n);
/// Every first move the proofs offer for (family, n); the first entry is
/// prescribed_move().
std::vector<VertexLabel> prescribed_alternatives(Family family, int n);

SplitSpec split_spec(Family family, int n);

/// For families whose printed deletion list is ambiguous, every
/// transcription worth trying; otherwise just split_spec(). The first
/// entry is the one split_spec() returns.
std::vector<SplitSpec> split_spec_candidates(Family family, int n);

/// Vertex pairing between the two halves left after a split. Normally each
/// half is one component; at small n a half may be several components, each
/// paired with an isomorphic partner.
struct MirrorMap {
  VertexSet first = 0;   // half holding the smaller index of every pair
  VertexSet second = 0;
  std::vector<std::pair<int, int>> pairs;  // (first-side, second-side), ascending
  std::vector<int> partner;                // -1 outside both components

  bool contains(int v) const {
    return v >= 0 && v < static_cast<int>(partner.size()) && partner[v] >= 0;
  }
};

/// Finds the lexicographically first isomorphism between the two components
/// of `position` once the spec's ignored vertices/edges are discarded.
/// Tints in the strategist's colour are ignored; the opponent's are not
/// allowed. Throws SpecViolation.
MirrorMap derive_mirror(const Position& position, const SplitSpec& spec,
                        Player strategist = Player::Left);

/// The strategist's answer to `opponent_move`. Throws StrategyBreach.
int copycat_response(const MirrorMap& mirror, int opponent_move);

struct VerificationReport {
  enum class Method { Copycat, SolverCheck };
  enum class Verdict { Win, Fail };

  Family family = Family::T2;
  int n = 0;
  Method method = Method::Copycat;
  VertexLabel first_move;
  std::uint64_t lines_explored = 0;
  int max_depth = 0;
  Verdict verdict = Verdict::Fail;
  /// Alternating moves from the first move on, labels; set iff Fail.
  std::optional<std::vector<VertexLabel>> failure_trace;
  std::string detail;
};

/// Plays the prescribed first move on the real graph and checks that the
/// copycat answer is legal against every adversary line and that the
/// adversary always runs out of moves first. Small-n overrides are checked
/// with the solver instead. Throws NoStrategy, ResourceExhausted.
VerificationReport verify_copycat(Family family, int n, SolverOptions options = {});

/// Same, for an explicit spec (used to compare candidate transcriptions).
VerificationReport verify_split(const SplitSpec& spec);

/// Disjoint union of two graphs; vertices of `a` come first. Labels are
/// rewritten as grid(k, 1) for `a` and grid(k, 2) for `b`.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Builds `g` with `tint` in `tint_colour` next to an untinted copy of `g`
/// and returns whether the other player, moving first, wins. Copycat play
/// predicts false. Requires |V(g)| <= 8.
bool check_symmetric_union(const Graph& g, VertexSet tint, Player tint_colour);

}  // namespace snort
