#include "aeg/strategy.hpp"

#include <cstdint>
#include <deque>
#include <string>
#include <utility>

#include "aeg/errors.hpp"

namespace aeg {

MemorylessStrategy MemorylessStrategy::empty(Player owner, std::size_t states) {
  return MemorylessStrategy{owner, std::vector<StateIndex>(states, kNoState)};
}

MemorylessStrategy MemorylessStrategy::first_arc(const GameGraph& game, Player owner) {
  auto strat = empty(owner, game.size());
  for (StateIndex s = 0; s < game.size(); ++s) {
    if (game.owner(s) == owner) strat.choice[s] = game.out(s).front().dst;
  }
  return strat;
}

std::uint64_t strategy_count(const GameGraph& game, Player player) {
  std::uint64_t count = 1;
  for (StateIndex s = 0; s < game.size(); ++s) {
    if (game.owner(s) != player) continue;
    const std::uint64_t d = game.out_degree(s);
    if (count > UINT64_MAX / d) return UINT64_MAX;
    count *= d;
  }
  return count;
}

void for_each_memoryless(const GameGraph& game, Player player, std::uint64_t cap,
                         const std::function<void(const MemorylessStrategy&)>& visit) {
  const std::uint64_t count = strategy_count(game, player);
  if (count > cap) {
    throw BudgetError("P" + std::to_string(static_cast<int>(player)) + " has " +
                      (count == UINT64_MAX ? std::string("more than 2^64") : std::to_string(count)) +
                      " memoryless strategies (product of out-degrees), above the cap of " + std::to_string(cap));
  }
  std::vector<StateIndex> owned;
  for (StateIndex s = 0; s < game.size(); ++s) {
    if (game.owner(s) == player) owned.push_back(s);
  }
  std::vector<std::size_t> digit(owned.size(), 0);
  MemorylessStrategy strat = MemorylessStrategy::first_arc(game, player);
  for (;;) {
    visit(strat);
    std::size_t i = 0;
    for (; i < owned.size(); ++i) {
      const auto arcs = game.out(owned[i]);
      if (++digit[i] < arcs.size()) {
        strat.choice[owned[i]] = arcs[digit[i]].dst;
        break;
      }
      digit[i] = 0;
      strat.choice[owned[i]] = arcs[0].dst;
    }
    if (i == owned.size()) return;
  }
}

void check_strategy(const GameGraph& game, const MemorylessStrategy& strat) {
  if (strat.choice.size() != game.size()) throw InputError("strategy does not match the game size");
  for (StateIndex s = 0; s < game.size(); ++s) {
    if (game.owner(s) != strat.owner) continue;
    if (strat.choice[s] == kNoState) throw InputError("strategy has no choice at '" + game.name(s) + "'");
    if (strat.choice[s] >= game.size() || !game.has_edge(s, strat.choice[s])) {
      throw InputError("strategy picks a missing edge at '" + game.name(s) + "'");
    }
  }
}

MooreStrategy::MooreStrategy(Player owner, std::vector<std::string> memory_labels, Memory initial)
    : owner_(owner), labels_(std::move(memory_labels)), initial_(initial) {
  if (labels_.empty() || initial_ >= labels_.size()) throw InputError("Moore strategy needs a valid initial memory");
}

std::optional<MooreStrategy::Memory> MooreStrategy::find_label(const std::string& label) const {
  for (Memory m = 0; m < labels_.size(); ++m) {
    if (labels_[m] == label) return m;
  }
  return std::nullopt;
}

void MooreStrategy::set_output(Memory m, StateIndex s, StateIndex succ) { output_[{m, s}] = succ; }

void MooreStrategy::set_update(Memory m, StateIndex s, StateIndex succ, Memory next) {
  if (next >= labels_.size()) throw InputError("Moore update targets an unknown memory state");
  update_[{m, s, succ}] = next;
}

std::optional<StateIndex> MooreStrategy::output(Memory m, StateIndex s) const {
  auto it = output_.find({m, s});
  if (it == output_.end()) return std::nullopt;
  return it->second;
}

MooreStrategy::Memory MooreStrategy::next(Memory m, StateIndex s, StateIndex succ) const {
  auto it = update_.find({m, s, succ});
  return it == update_.end() ? m : it->second;
}

std::set<MooreStrategy::Memory> MooreStrategy::reachable_memory(const GameGraph& game) const {
  std::set<std::pair<Memory, StateIndex>> seen;
  std::deque<std::pair<Memory, StateIndex>> queue{{initial_, game.init()}};
  seen.insert(queue.front());
  std::set<Memory> memories;
  while (!queue.empty()) {
    auto [m, s] = queue.front();
    queue.pop_front();
    memories.insert(m);
    std::vector<StateIndex> moves;
    if (game.owner(s) == owner_) {
      auto succ = output(m, s);
      if (!succ || !game.has_edge(s, *succ)) {
        throw InputError("Moore strategy has no valid move at memory '" + labels_[m] + "' in '" + game.name(s) + "'");
      }
      moves.push_back(*succ);
    } else {
      for (const Arc& a : game.out(s)) moves.push_back(a.dst);
    }
    for (StateIndex t : moves) {
      std::pair<Memory, StateIndex> node{next(m, s, t), t};
      if (seen.insert(node).second) queue.push_back(node);
    }
  }
  return memories;
}

MooreStrategy as_moore(const GameGraph& game, const MemorylessStrategy& strat) {
  check_strategy(game, strat);
  MooreStrategy moore(strat.owner, {"m"}, 0);
  for (StateIndex s = 0; s < game.size(); ++s) {
    if (game.owner(s) == strat.owner) moore.set_output(0, s, strat.choice[s]);
  }
  return moore;
}

Player owner_of(const Strategy& s) {
  return std::visit(
      [](const auto& strat) -> Player {
        if constexpr (std::is_same_v<std::decay_t<decltype(strat)>, MemorylessStrategy>) {
          return strat.owner;
        } else {
          return strat.owner();
        }
      },
      s);
}

void check_lasso(const GameGraph& game, const Lasso& lasso, std::optional<StateIndex> start) {
  if (lasso.cycle.empty()) throw InputError("lasso cycle must be nonempty");
  std::vector<StateIndex> seq = lasso.prefix;
  seq.insert(seq.end(), lasso.cycle.begin(), lasso.cycle.end());
  for (StateIndex s : seq) {
    if (s >= game.size()) throw InputError("lasso uses an unknown state");
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!game.has_edge(seq[i], seq[i + 1])) {
      throw InputError("lasso step " + game.name(seq[i]) + " -> " + game.name(seq[i + 1]) + " is not an edge");
    }
  }
  if (!game.has_edge(lasso.cycle.back(), lasso.cycle.front())) {
    throw InputError("lasso cycle does not close: " + game.name(lasso.cycle.back()) + " -> " +
                     game.name(lasso.cycle.front()) + " is not an edge");
  }
  if (start && lasso.start() != *start) throw InputError("lasso does not start in '" + game.name(*start) + "'");
}

std::vector<std::int64_t> prefix_weights(const GameGraph& game, const Lasso& lasso) {
  std::vector<std::int64_t> w;
  for (std::size_t i = 0; i < lasso.prefix.size(); ++i) {
    const StateIndex next = i + 1 < lasso.prefix.size() ? lasso.prefix[i + 1] : lasso.cycle.front();
    w.push_back(game.weight(lasso.prefix[i], next).value());
  }
  return w;
}

std::vector<std::int64_t> cycle_weights(const GameGraph& game, const Lasso& lasso) {
  std::vector<std::int64_t> w;
  const auto k = lasso.cycle.size();
  for (std::size_t i = 0; i < k; ++i) w.push_back(game.weight(lasso.cycle[i], lasso.cycle[(i + 1) % k]).value());
  return w;
}

bool is_simple(const Lasso& lasso) {
  std::set<StateIndex> seen;
  for (StateIndex s : lasso.prefix) {
    if (!seen.insert(s).second) return false;
  }
  for (StateIndex s : lasso.cycle) {
    if (!seen.insert(s).second) return false;
  }
  return true;
}

Lasso follow(StateIndex from, const std::vector<StateIndex>& succ) {
  std::vector<std::size_t> position(succ.size(), static_cast<std::size_t>(-1));
  std::vector<StateIndex> path;
  StateIndex s = from;
  while (position[s] == static_cast<std::size_t>(-1)) {
    position[s] = path.size();
    path.push_back(s);
    s = succ[s];
  }
  Lasso l;
  l.prefix.assign(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(position[s]));
  l.cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(position[s]), path.end());
  return l;
}

MemorylessStrategy strategy_from_lasso(const GameGraph& game, const Lasso& lasso, Player owner) {
  check_lasso(game, lasso);
  if (!is_simple(lasso)) throw InputError("only simple lassos are realised by memoryless strategies");
  auto strat = MemorylessStrategy::first_arc(game, owner);
  std::vector<StateIndex> seq = lasso.prefix;
  seq.insert(seq.end(), lasso.cycle.begin(), lasso.cycle.end());
  seq.push_back(lasso.cycle.front());
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (game.owner(seq[i]) == owner) strat.choice[seq[i]] = seq[i + 1];
  }
  return strat;
}

GameGraph restrict(const GameGraph& game, const MemorylessStrategy& strat) {
  check_strategy(game, strat);
  std::vector<StateDecl> states;
  std::vector<std::vector<Arc>> arcs(game.size());
  for (StateIndex s = 0; s < game.size(); ++s) {
    states.push_back({game.name(s), opponent(strat.owner)});
    for (const Arc& a : game.out(s)) {
      if (game.owner(s) != strat.owner || a.dst == strat.choice[s]) arcs[s].push_back(a);
    }
  }
  return GameGraph::from_parts(std::move(states), arcs, game.init());
}

namespace {

class Runner {
 public:
  Runner(const GameGraph& game, const Strategy& strat) : game_(game), strat_(strat) {
    if (const auto* moore = std::get_if<MooreStrategy>(&strat_)) memory_ = moore->initial();
  }

  StateIndex decide(StateIndex s) const {
    if (const auto* ml = std::get_if<MemorylessStrategy>(&strat_)) {
      if (ml->choice.size() != game_.size() || ml->choice[s] == kNoState) missing(s);
      if (!game_.has_edge(s, ml->choice[s])) invalid(s);
      return ml->choice[s];
    }
    auto succ = std::get<MooreStrategy>(strat_).output(memory_, s);
    if (!succ) missing(s);
    if (*succ >= game_.size() || !game_.has_edge(s, *succ)) invalid(s);
    return *succ;
  }

  void advance(StateIndex s, StateIndex succ) {
    if (const auto* moore = std::get_if<MooreStrategy>(&strat_)) memory_ = moore->next(memory_, s, succ);
  }

 private:
  [[noreturn]] void missing(StateIndex s) const {
    throw InputError(std::string(to_string(owner_of(strat_))) + " strategy has no decision at '" + game_.name(s) + "'");
  }
  [[noreturn]] void invalid(StateIndex s) const {
    throw InputError(std::string(to_string(owner_of(strat_))) + " strategy picks a missing edge at '" + game_.name(s) + "'");
  }

  const GameGraph& game_;
  const Strategy& strat_;
  MooreStrategy::Memory memory_ = 0;
};

}  // namespace

std::vector<StateIndex> outcome(const GameGraph& game, const Strategy& p1, const Strategy& p2, std::size_t steps) {
  if (owner_of(p1) != Player::P1 || owner_of(p2) != Player::P2) throw InputError("strategies passed for the wrong players");
  Runner r1(game, p1);
  Runner r2(game, p2);
  std::vector<StateIndex> play{game.init()};
  play.reserve(steps + 1);
  for (std::size_t i = 0; i < steps; ++i) {
    const StateIndex s = play.back();
    const StateIndex succ = game.owner(s) == Player::P1 ? r1.decide(s) : r2.decide(s);
    r1.advance(s, succ);
    r2.advance(s, succ);
    play.push_back(succ);
  }
  return play;
}

Lasso outcome_lasso(const GameGraph& game, const MemorylessStrategy& p1, const MemorylessStrategy& p2) {
  check_strategy(game, p1);
  check_strategy(game, p2);
  std::vector<StateIndex> succ(game.size());
  for (StateIndex s = 0; s < game.size(); ++s) succ[s] = game.owner(s) == Player::P1 ? p1.choice[s] : p2.choice[s];
  return follow(game.init(), succ);
}

}  // namespace aeg
