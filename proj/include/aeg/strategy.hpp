#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "aeg/game.hpp"
#include "aeg/rational.hpp"

namespace aeg {

/// Positional strategy: `choice[s]` is the successor picked at each state owned
/// by `owner`, kNoState elsewhere.
struct MemorylessStrategy {
  Player owner = Player::P1;
  std::vector<StateIndex> choice;

  /// A strategy with no decisions recorded yet.
  static MemorylessStrategy empty(Player owner, std::size_t states);
  /// Picks the first out-arc at every owned state.
  static MemorylessStrategy first_arc(const GameGraph& game, Player owner);

  friend bool operator==(const MemorylessStrategy&, const MemorylessStrategy&) = default;
};

/// Number of memoryless strategies of `player` (product of out-degrees),
/// saturating at UINT64_MAX.
std::uint64_t strategy_count(const GameGraph& game, Player player);

/// Calls `visit` on every memoryless strategy of `player`, in mixed-radix
/// order over the owned states (first arcs first). Throws BudgetError before
/// visiting anything when there are more than `cap` strategies.
void for_each_memoryless(const GameGraph& game, Player player, std::uint64_t cap,
                         const std::function<void(const MemorylessStrategy&)>& visit);

/// Throws InputError unless `strat` picks an existing edge at every state of its owner.
void check_strategy(const GameGraph& game, const MemorylessStrategy& strat);

/// Finite-memory strategy as a Moore machine. Memory is updated on every move
/// (owned or not) by the taken edge; missing update entries leave the memory
/// unchanged. The output at (memory, owned state) is the successor to move to.
class MooreStrategy {
 public:
  using Memory = std::size_t;

  MooreStrategy(Player owner, std::vector<std::string> memory_labels, Memory initial);

  Player owner() const { return owner_; }
  Memory initial() const { return initial_; }
  std::size_t memory_count() const { return labels_.size(); }
  const std::string& label(Memory m) const { return labels_[m]; }
  std::optional<Memory> find_label(const std::string& label) const;

  void set_output(Memory m, StateIndex s, StateIndex succ);
  void set_update(Memory m, StateIndex s, StateIndex succ, Memory next);

  std::optional<StateIndex> output(Memory m, StateIndex s) const;
  Memory next(Memory m, StateIndex s, StateIndex succ) const;

  const std::map<std::pair<Memory, StateIndex>, StateIndex>& outputs() const { return output_; }
  const std::map<std::tuple<Memory, StateIndex, StateIndex>, Memory>& updates() const { return update_; }

  /// Memory states reachable from (initial, init) when the opponent may take
  /// any edge. Throws InputError when a reachable owned decision is missing.
  std::set<Memory> reachable_memory(const GameGraph& game) const;

 private:
  Player owner_;
  std::vector<std::string> labels_;
  Memory initial_;
  std::map<std::pair<Memory, StateIndex>, StateIndex> output_;
  std::map<std::tuple<Memory, StateIndex, StateIndex>, Memory> update_;
};

/// Memoryless strategies viewed as one-state Moore machines.
MooreStrategy as_moore(const GameGraph& game, const MemorylessStrategy& strat);

using Strategy = std::variant<MemorylessStrategy, MooreStrategy>;

Player owner_of(const Strategy& s);

/// Ultimately periodic play prefix . cycle^omega; the cycle wraps last -> first.
struct Lasso {
  std::vector<StateIndex> prefix;
  std::vector<StateIndex> cycle;

  StateIndex start() const { return prefix.empty() ? cycle.front() : prefix.front(); }
  friend bool operator==(const Lasso&, const Lasso&) = default;
};

/// Throws InputError unless every step of the lasso is an edge of `game` and,
/// when given, the lasso starts in `start`.
void check_lasso(const GameGraph& game, const Lasso& lasso, std::optional<StateIndex> start = std::nullopt);

/// Weights of the prefix edges, including the junction edge into the cycle.
std::vector<std::int64_t> prefix_weights(const GameGraph& game, const Lasso& lasso);
/// Weights of one traversal of the cycle, including the wrap-around edge.
std::vector<std::int64_t> cycle_weights(const GameGraph& game, const Lasso& lasso);

/// True when no state occurs twice along prefix and cycle together.
bool is_simple(const Lasso& lasso);

/// The lasso obtained by following `succ` from `from` until a state repeats.
Lasso follow(StateIndex from, const std::vector<StateIndex>& succ);

/// Memoryless strategy for `owner` reproducing a simple lasso; other owned
/// states take their first arc. Throws InputError for non-simple lassos.
MemorylessStrategy strategy_from_lasso(const GameGraph& game, const Lasso& lasso, Player owner);

/// Value, threshold verdict and witnesses of a solved game.
struct SolveResult {
  ExtendedRational value = ExtendedRational::pos_inf();
  std::optional<Player> winner;
  std::optional<Strategy> witness_p1;
  std::optional<Strategy> witness_p2;
  std::optional<Lasso> witness_play;
};

/// The one-player game left when `strat.owner` commits to `strat`: owned states
/// keep only their chosen edge and every state is handed to the opponent.
GameGraph restrict(const GameGraph& game, const MemorylessStrategy& strat);

/// The unique consistent play prefix of `steps` moves from the initial state.
/// Throws InputError when a strategy lacks a decision it is asked for.
std::vector<StateIndex> outcome(const GameGraph& game, const Strategy& p1, const Strategy& p2, std::size_t steps);

/// Outcome of two memoryless strategies as a lasso from the initial state.
Lasso outcome_lasso(const GameGraph& game, const MemorylessStrategy& p1, const MemorylessStrategy& p2);

}  // namespace aeg
