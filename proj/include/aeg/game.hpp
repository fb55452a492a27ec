#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace aeg {

enum class Player : std::uint8_t { P1 = 1, P2 = 2 };

constexpr Player opponent(Player p) { return p == Player::P1 ? Player::P2 : Player::P1; }

std::string_view to_string(Player p);

using StateIndex = std::uint32_t;
inline constexpr StateIndex kNoState = std::numeric_limits<StateIndex>::max();

struct Arc {
  StateIndex dst;
  std::int64_t weight;
};

struct StateDecl {
  std::string name;
  Player owner;
};

struct EdgeDecl {
  std::string src;
  std::string dst;
  std::int64_t weight;
};

/// Name-based description of an arena, as read from a file or written by a
/// fixture. May violate the arena invariants; see validate().
struct GameDescription {
  std::vector<StateDecl> states;
  std::vector<EdgeDecl> edges;
  std::string init;
};

struct Violation {
  enum class Kind : std::uint8_t { DuplicateState, UnknownState, DuplicateEdge, BlockingState, BadInit };
  Kind kind;
  std::string message;
};

/// Lists every broken arena invariant; empty iff the description is a valid game.
std::vector<Violation> validate(const GameDescription& desc);

/// Finite directed weighted arena with an ownership partition and an initial
/// state. Immutable once built; at most one edge per ordered pair of states and
/// every state has a successor.
class GameGraph {
 public:
  /// Throws InputError carrying the validation report when `desc` is invalid.
  static GameGraph build(const GameDescription& desc);

  /// Index-based construction used by the graph transformations. `arcs[s]` are
  /// the out-arcs of state s in the order they should be enumerated.
  static GameGraph from_parts(std::vector<StateDecl> states, const std::vector<std::vector<Arc>>& arcs,
                              StateIndex init);

  std::size_t size() const { return states_.size(); }
  std::size_t edge_count() const { return arcs_.size(); }
  StateIndex init() const { return init_; }
  std::int64_t max_abs_weight() const { return max_abs_weight_; }

  const std::string& name(StateIndex s) const { return states_[s].name; }
  Player owner(StateIndex s) const { return states_[s].owner; }
  std::span<const Arc> out(StateIndex s) const {
    return {arcs_.data() + offsets_[s], arcs_.data() + offsets_[s + 1]};
  }
  std::size_t out_degree(StateIndex s) const { return offsets_[s + 1] - offsets_[s]; }

  std::optional<std::int64_t> weight(StateIndex src, StateIndex dst) const;
  bool has_edge(StateIndex src, StateIndex dst) const { return weight(src, dst).has_value(); }

  std::optional<StateIndex> find(std::string_view name) const;
  /// Like find(), but throws InputError for unknown names.
  StateIndex at(std::string_view name) const;

  /// The owner of every state, if all states share one owner.
  std::optional<Player> sole_owner() const;
  /// The single player that makes real choices: every state of the other
  /// player has out-degree one. Returns the sole owner for one-player arenas.
  std::optional<Player> deciding_player() const;

  GameDescription describe() const;
  GameGraph with_init(StateIndex s) const;
  GameGraph with_owner(Player p) const;
  GameGraph negated() const;

 private:
  GameGraph() = default;

  std::vector<StateDecl> states_;
  std::vector<std::size_t> offsets_;
  std::vector<Arc> arcs_;
  StateIndex init_ = 0;
  std::int64_t max_abs_weight_ = 0;
  std::unordered_map<std::string, StateIndex> index_;
};

/// Same state names, owners, edges and initial state, irrespective of the
/// declaration order.
bool equivalent(const GameGraph& a, const GameGraph& b);

/// States reachable from `from` (including it), as a membership mask.
std::vector<bool> reachable_from(const GameGraph& game, StateIndex from);

/// Strongly connected components in reverse topological order (sink
/// components first). `component[s]` is the index of the component holding s.
struct SccDecomposition {
  std::vector<std::vector<StateIndex>> components;
  std::vector<std::uint32_t> component;
};
SccDecomposition strongly_connected_components(const GameGraph& game);

}  // namespace aeg
