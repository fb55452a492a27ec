#include "aeg/ae_solver.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "aeg/classic.hpp"
#include "aeg/errors.hpp"
#include "aeg/kernels.hpp"
#include "aeg/payoff.hpp"

namespace aeg {

namespace {

using kernels::kInf;

void require_one_player(const GameGraph& game) {
  for (StateIndex s = 0; s < game.size(); ++s) {
    if (game.owner(s) == Player::P2 && game.out_degree(s) > 1) {
      throw InputError("expected a one-player arena, but P2 chooses at " + game.name(s));
    }
  }
}

// Backward table for cycles of exactly `k` moves closing at `s`:
// cost[j][v][e] = least sum of c_i * (k - i) over moves j..k-1 that lead
// from v at energy e back to s at energy 0.
struct CycleTable {
  std::size_t k;
  std::int64_t range;  // energies lie in [-range, range]
  std::size_t width;   // 2 * range + 1
  std::vector<std::int64_t> cost;

  std::int64_t& at(std::size_t j, StateIndex v, std::int64_t e, std::size_t n) {
    return cost[(j * n + v) * width + static_cast<std::size_t>(e + range)];
  }
};

CycleTable cycle_table(const GameGraph& game, const std::vector<std::vector<Arc>>& arcs, StateIndex s,
                       std::size_t k) {
  const std::size_t n = game.size();
  CycleTable t{k, static_cast<std::int64_t>(k) * game.max_abs_weight(), 0, {}};
  t.width = static_cast<std::size_t>(2 * t.range + 1);
  t.cost.assign((k + 1) * n * t.width, kInf);
  t.at(k, s, 0, n) = 0;
  for (std::size_t j = k; j-- > 0;) {
    const std::int64_t factor = static_cast<std::int64_t>(k - j);
    for (StateIndex v = 0; v < n; ++v) {
      if (j == 0 && v != s) continue;
      std::int64_t* dst = &t.at(j, v, -t.range, n);
      for (const Arc& a : arcs[v]) {
        // dst[e] = min(dst[e], next[e + c] + c * factor) for e, e + c in range.
        const std::int64_t lo = std::max(-t.range, -t.range - a.weight);
        const std::int64_t hi = std::min(t.range, t.range - a.weight);
        if (lo > hi) continue;
        const std::int64_t* src = &t.at(j + 1, a.dst, lo + a.weight, n);
        kernels::shift_min_add({dst + (lo + t.range), static_cast<std::size_t>(hi - lo + 1)},
                               {src, static_cast<std::size_t>(hi - lo + 1)}, a.weight * factor);
      }
    }
  }
  return t;
}

// Lexicographically smallest optimal cycle in a table.
std::vector<StateIndex> smallest_cycle(const GameGraph& game, const std::vector<std::vector<Arc>>& arcs,
                                       CycleTable& t, StateIndex s) {
  const std::size_t n = game.size();
  std::vector<StateIndex> cycle{s};
  StateIndex v = s;
  std::int64_t e = 0;
  for (std::size_t j = 0; j < t.k; ++j) {
    const std::int64_t target = t.at(j, v, e, n);
    const std::int64_t factor = static_cast<std::int64_t>(t.k - j);
    const Arc* pick = nullptr;
    for (const Arc& a : arcs[v]) {
      const std::int64_t next = e + a.weight;
      if (next < -t.range || next > t.range) continue;
      const std::int64_t rest = t.at(j + 1, a.dst, next, n);
      if (rest >= kInf || rest + a.weight * factor != target) continue;
      if (!pick || a.dst < pick->dst) pick = &a;
    }
    if (!pick) throw std::logic_error("zero-cycle table is inconsistent");
    v = pick->dst;
    e += pick->weight;
    cycle.push_back(v);
  }
  cycle.pop_back();
  return cycle;
}

// Shortest (by moves) path from `from` to the first state of `targets`.
std::vector<StateIndex> bfs_path(const GameGraph& game, StateIndex from, const std::vector<bool>& targets) {
  std::vector<StateIndex> parent(game.size(), kNoState);
  std::vector<bool> seen(game.size(), false);
  std::deque<StateIndex> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const StateIndex u = queue.front();
    queue.pop_front();
    if (targets[u]) {
      std::vector<StateIndex> path;
      for (StateIndex v = u; v != kNoState; v = parent[v]) path.push_back(v);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const Arc& a : game.out(u)) {
      if (!seen[a.dst]) {
        seen[a.dst] = true;
        parent[a.dst] = u;
        queue.push_back(a.dst);
      }
    }
  }
  throw std::logic_error("target unreachable");
}

// Lasso entering `cycle` by the shortest path from `from`, rotated so that
// the cycle starts where the path meets it.
Lasso enter_cycle(const GameGraph& game, StateIndex from, const std::vector<StateIndex>& cycle) {
  std::vector<bool> on_cycle(game.size(), false);
  for (StateIndex v : cycle) on_cycle[v] = true;
  std::vector<StateIndex> path = bfs_path(game, from, on_cycle);
  const StateIndex hit = path.back();
  path.pop_back();
  const auto pos = std::find(cycle.begin(), cycle.end(), hit) - cycle.begin();
  Lasso l{std::move(path), {}};
  l.cycle.assign(cycle.begin() + pos, cycle.end());
  l.cycle.insert(l.cycle.end(), cycle.begin(), cycle.begin() + pos);
  return l;
}

ExtendedRational ae_of(const GameGraph& game, const Lasso& l) { return lasso_value(game, l, PayoffKind::AE); }

}  // namespace

std::optional<ZeroCycleResult> best_zero_cycle(const GameGraph& game, StateIndex s) {
  require_one_player(game);
  const std::size_t n = game.size();
  const SccDecomposition scc = strongly_connected_components(game);
  std::vector<std::vector<Arc>> arcs(n);
  for (StateIndex v = 0; v < n; ++v) {
    if (scc.component[v] != scc.component[s]) continue;
    for (const Arc& a : game.out(v)) {
      if (scc.component[a.dst] == scc.component[s]) arcs[v].push_back(a);
    }
  }

  std::optional<ZeroCycleResult> best;
  for (std::size_t k = 1; k <= n; ++k) {
    CycleTable t = cycle_table(game, arcs, s, k);
    const std::int64_t sum = t.at(0, s, 0, n);
    if (sum >= kInf) continue;
    const Rational ae(sum, static_cast<std::int64_t>(k));
    if (best && ae > best->ae) continue;
    std::vector<StateIndex> cycle = smallest_cycle(game, arcs, t, s);
    if (best && ae == best->ae && !(cycle < best->cycle)) continue;
    best = ZeroCycleResult{s, std::move(cycle), ae, k, sum};
  }
  return best;
}

Lasso simplify_lasso(const GameGraph& game, Lasso l) {
  for (;;) {
    std::vector<std::int64_t> seen(game.size(), -1);
    bool changed = false;
    // Repeated prefix state: drop the loop between the two visits.
    for (std::size_t i = 0; i < l.prefix.size() && !changed; ++i) {
      const StateIndex v = l.prefix[i];
      if (seen[v] >= 0) {
        l.prefix.erase(l.prefix.begin() + seen[v], l.prefix.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      }
      seen[v] = static_cast<std::int64_t>(i);
    }
    if (changed) continue;
    // Prefix meets the cycle early: enter the cycle there.
    for (std::size_t j = 0; j < l.cycle.size() && !changed; ++j) {
      const std::int64_t i = seen[l.cycle[j]];
      if (i < 0) continue;
      l.prefix.resize(static_cast<std::size_t>(i));
      std::rotate(l.cycle.begin(), l.cycle.begin() + static_cast<std::ptrdiff_t>(j), l.cycle.end());
      changed = true;
    }
    if (changed) continue;
    // Cycle revisits a state: split into an inner and an outer cycle.
    std::vector<std::int64_t> pos(game.size(), -1);
    for (std::size_t j = 0; j < l.cycle.size() && !changed; ++j) {
      const StateIndex v = l.cycle[j];
      if (pos[v] < 0) {
        pos[v] = static_cast<std::int64_t>(j);
        continue;
      }
      const auto i = static_cast<std::size_t>(pos[v]);
      Lasso inner{l.prefix, {}};
      inner.prefix.insert(inner.prefix.end(), l.cycle.begin(), l.cycle.begin() + static_cast<std::ptrdiff_t>(i));
      inner.cycle.assign(l.cycle.begin() + static_cast<std::ptrdiff_t>(i), l.cycle.begin() + static_cast<std::ptrdiff_t>(j));
      Lasso outer{l.prefix, {}};
      outer.cycle.assign(l.cycle.begin(), l.cycle.begin() + static_cast<std::ptrdiff_t>(i));
      outer.cycle.insert(outer.cycle.end(), l.cycle.begin() + static_cast<std::ptrdiff_t>(j), l.cycle.end());
      l = ae_of(game, inner) < ae_of(game, outer) ? std::move(inner) : std::move(outer);
      changed = true;
    }
    if (!changed) return l;
  }
}

SolveResult ae_value_1p(const GameGraph& game, StateIndex from) {
  require_one_player(game);
  SolveResult result;
  result.witness_p2 = MemorylessStrategy::first_arc(game, Player::P2);

  if (auto negative = has_reachable_negative_cycle(game, from)) {
    Lasso l = enter_cycle(game, from, *negative);
    result.value = ExtendedRational::neg_inf();
    result.witness_p1 = strategy_from_lasso(game, l, Player::P1);
    result.witness_play = std::move(l);
    return result;
  }

  const EnergyReach reach = min_energy_reach(game, from);
  std::optional<Rational> best;
  Lasso witness;
  for (StateIndex s = 0; s < game.size(); ++s) {
    if (!reach.level[s]) continue;
    const auto zero = best_zero_cycle(game, s);
    if (!zero) continue;
    const Rational candidate = *reach.level[s] + zero->ae;
    if (best && !(candidate < *best)) continue;
    best = candidate;
    witness.prefix = reach.path_to(s);
    witness.prefix.pop_back();
    witness.cycle = zero->cycle;
  }
  if (!best) {
    result.value = ExtendedRational::pos_inf();
    return result;
  }

  witness = simplify_lasso(game, std::move(witness));
  if (ae_of(game, witness) != ExtendedRational(*best)) throw std::logic_error("witness lasso lost optimality");
  result.value = *best;
  result.witness_p1 = strategy_from_lasso(game, witness, Player::P1);
  result.witness_play = std::move(witness);
  return result;
}

SolveResult ae_decide_2p(const GameGraph& game, StateIndex from, const Rational& t, const AeConfig& cfg) {
  SolveResult result;
  const bool p2_chooses = strategy_count(game, Player::P2) > 1;
  if (!p2_chooses) {
    result = ae_value_1p(game, from);
  } else {
    std::optional<SolveResult> worst;
    MemorylessStrategy worst_strategy;
    for_each_memoryless(game, Player::P2, cfg.max_strategies, [&](const MemorylessStrategy& s2) {
      SolveResult r = ae_value_1p(restrict(game, s2), from);
      if (!worst || r.value > worst->value) {
        worst = std::move(r);
        worst_strategy = s2;
      }
    });
    result.value = worst->value;
    result.witness_play = worst->witness_play;
    result.witness_p2 = worst_strategy;

    // P1's optimal strategy: the commitment that leaves P2 the least.
    std::optional<ExtendedRational> least;
    MemorylessStrategy least_strategy;
    for_each_memoryless(game, Player::P1, cfg.max_strategies, [&](const MemorylessStrategy& s1) {
      const GameGraph rest = restrict(game, s1).negated().with_owner(Player::P1);
      const ExtendedRational v = -ae_value_1p(rest, from).value;
      if (!least || v < *least) {
        least = v;
        least_strategy = s1;
      }
    });
    if (*least != result.value) throw std::logic_error("memoryless minimax values disagree");
    result.witness_p1 = least_strategy;
  }
  result.winner = result.value <= ExtendedRational(t) ? Player::P1 : Player::P2;
  return result;
}

}  // namespace aeg
