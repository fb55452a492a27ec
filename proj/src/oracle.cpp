#include "aeg/oracle.hpp"

#include <vector>

namespace aeg::oracle {

void enumerate_simple_lassos(const GameGraph& game, StateIndex from, const OracleBudget& budget,
                             const std::function<void(const Lasso&)>& visit) {
  const std::size_t n = game.size();
  const std::size_t max_prefix = budget.max_prefix_len.value_or(n - 1);
  const std::size_t max_cycle = budget.max_cycle_len.value_or(n);

  std::vector<StateIndex> path{from};
  std::vector<std::size_t> next_arc{0};
  std::vector<std::int64_t> position(n, -1);
  position[from] = 0;

  // Lassos closing at the current path end: an edge back to path[i].
  const auto emit = [&] {
    const StateIndex last = path.back();
    for (std::size_t i = 0; i < path.size(); ++i) {
      const std::size_t at = path.size() - 1 - i;  // shorter cycles first
      if (at > max_prefix || path.size() - at > max_cycle) continue;
      if (!game.has_edge(last, path[at])) continue;
      Lasso l;
      l.prefix.assign(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(at));
      l.cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(at), path.end());
      visit(l);
    }
  };

  emit();
  while (!path.empty()) {
    const auto arcs = game.out(path.back());
    std::size_t& i = next_arc.back();
    if (i == arcs.size() || path.size() >= max_prefix + max_cycle) {
      position[path.back()] = -1;
      path.pop_back();
      next_arc.pop_back();
      continue;
    }
    const StateIndex dst = arcs[i++].dst;
    if (position[dst] >= 0) continue;
    position[dst] = static_cast<std::int64_t>(path.size());
    path.push_back(dst);
    next_arc.push_back(0);
    emit();
  }
}

LassoOptimum best_lasso_value(const GameGraph& game, StateIndex from, PayoffKind kind,
                              const std::optional<EnergyConstraint>& c, const OracleBudget& budget, bool maximize) {
  LassoOptimum best;
  best.value = maximize ? ExtendedRational::neg_inf() : ExtendedRational::pos_inf();
  enumerate_simple_lassos(game, from, budget, [&](const Lasso& l) {
    if (c && !check_energy_bounds(game, l, *c)) return;
    const ExtendedRational v = lasso_value(game, l, kind);
    if (!best.witness || (maximize ? v > best.value : v < best.value)) {
      best.value = v;
      best.witness = l;
    }
  });
  return best;
}

SolveResult minimax_value(const GameGraph& game, StateIndex from, PayoffKind kind,
                          const std::optional<EnergyConstraint>& c, const OracleBudget& budget, Player enumerate) {
  const bool outer_max = enumerate == Player::P2;
  SolveResult result;
  std::optional<MemorylessStrategy> best_strategy;
  std::optional<LassoOptimum> best_response;
  for_each_memoryless(game, enumerate, budget.max_strategy_count, [&](const MemorylessStrategy& strat) {
    const GameGraph rest = restrict(game, strat);
    LassoOptimum r = best_lasso_value(rest, from, kind, c, budget, !outer_max);
    if (!best_response || (outer_max ? r.value > best_response->value : r.value < best_response->value)) {
      best_response = std::move(r);
      best_strategy = strat;
    }
  });

  result.value = best_response->value;
  result.witness_play = best_response->witness;
  const Player responder = opponent(enumerate);
  MemorylessStrategy response = MemorylessStrategy::first_arc(game, responder);
  if (best_response->witness) {
    // The witness is simple, so it fixes one successor per visited state.
    const Lasso& l = *best_response->witness;
    std::vector<StateIndex> states = l.prefix;
    states.insert(states.end(), l.cycle.begin(), l.cycle.end());
    for (std::size_t i = 0; i < states.size(); ++i) {
      const StateIndex succ = i + 1 < states.size() ? states[i + 1] : l.cycle.front();
      if (game.owner(states[i]) == responder) response.choice[states[i]] = succ;
    }
  }
  (enumerate == Player::P1 ? result.witness_p1 : result.witness_p2) = *best_strategy;
  (enumerate == Player::P1 ? result.witness_p2 : result.witness_p1) = response;
  return result;
}

}  // namespace aeg::oracle
