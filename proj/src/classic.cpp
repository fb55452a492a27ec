#include "aeg/classic.hpp"

#include <algorithm>
#include <deque>

#include "aeg/errors.hpp"
#include "aeg/kernels.hpp"
#include "aeg/reductions.hpp"
#include "ell_build.hpp"

namespace aeg {

namespace {

constexpr std::int64_t kUnset = kernels::kInf;

// Gauss-Seidel Bellman-Ford. Returns the last state improved in round n, or
// kNoState when the distances settled.
StateIndex bellman_ford(const GameGraph& game, StateIndex from, std::vector<std::int64_t>& dist,
                        std::vector<StateIndex>& parent) {
  const std::size_t n = game.size();
  dist.assign(n, kUnset);
  parent.assign(n, kNoState);
  dist[from] = 0;
  StateIndex last = kNoState;
  for (std::size_t round = 0; round < n; ++round) {
    last = kNoState;
    for (StateIndex u = 0; u < n; ++u) {
      if (dist[u] == kUnset) continue;
      for (const Arc& a : game.out(u)) {
        if (dist[u] + a.weight < dist[a.dst]) {
          dist[a.dst] = dist[u] + a.weight;
          parent[a.dst] = u;
          last = a.dst;
        }
      }
    }
    if (last == kNoState) return kNoState;
  }
  return last;
}

}  // namespace

std::optional<std::vector<StateIndex>> has_reachable_negative_cycle(const GameGraph& game, StateIndex from) {
  std::vector<std::int64_t> dist;
  std::vector<StateIndex> parent;
  StateIndex x = bellman_ford(game, from, dist, parent);
  if (x == kNoState) return std::nullopt;
  for (std::size_t i = 0; i < game.size(); ++i) x = parent[x];
  std::vector<StateIndex> cycle{x};
  for (StateIndex y = parent[x]; y != x; y = parent[y]) cycle.push_back(y);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

std::vector<StateIndex> EnergyReach::path_to(StateIndex target) const {
  std::vector<StateIndex> path;
  if (!level[target]) return path;
  for (StateIndex v = target; v != kNoState; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

EnergyReach min_energy_reach(const GameGraph& game, StateIndex from) {
  std::vector<std::int64_t> dist;
  EnergyReach r;
  if (bellman_ford(game, from, dist, r.parent) != kNoState) {
    throw InputError("a negative cycle is reachable from " + game.name(from));
  }
  r.level.resize(game.size());
  for (StateIndex v = 0; v < game.size(); ++v) {
    if (dist[v] != kUnset) r.level[v] = dist[v];
  }
  return r;
}

SolveResult eglu_solve(const GameGraph& game, std::int64_t upper) {
  const ExpandedArena arena = ExpandedArena::build(game, upper);
  const GameGraph& g = arena.game();
  const std::size_t n = g.size();

  std::vector<std::vector<StateIndex>> preds(n);
  std::vector<std::size_t> pending(n);
  for (StateIndex v = 0; v < n; ++v) {
    pending[v] = g.out_degree(v);
    for (const Arc& a : g.out(v)) preds[a.dst].push_back(v);
  }

  MemorylessStrategy p1 = MemorylessStrategy::first_arc(g, Player::P1);
  MemorylessStrategy p2 = MemorylessStrategy::first_arc(g, Player::P2);
  std::vector<bool> attr(n, false);
  std::deque<StateIndex> queue{arena.sink()};
  attr[arena.sink()] = true;
  while (!queue.empty()) {
    const StateIndex v = queue.front();
    queue.pop_front();
    for (StateIndex u : preds[v]) {
      if (attr[u]) continue;
      if (g.owner(u) == Player::P2) {
        p2.choice[u] = v;
      } else if (--pending[u] != 0) {
        continue;
      }
      attr[u] = true;
      queue.push_back(u);
    }
  }

  SolveResult result;
  result.witness_p2 = p2;
  if (attr[g.init()]) {
    result.value = ExtendedRational::pos_inf();
    result.winner = Player::P2;
    return result;
  }
  for (StateIndex v = 0; v < n; ++v) {
    if (g.owner(v) != Player::P1 || attr[v]) continue;
    for (const Arc& a : g.out(v)) {
      if (!attr[a.dst]) {
        p1.choice[v] = a.dst;
        break;
      }
    }
  }
  result.value = Rational(0);
  result.winner = Player::P1;
  result.witness_p1 = lift_strategy(arena, p1, game);
  return result;
}

std::vector<std::optional<std::int64_t>> egl_min_credit(const GameGraph& game) {
  const std::size_t n = game.size();
  const std::int64_t ceiling = static_cast<std::int64_t>(n) * game.max_abs_weight();
  std::vector<std::uint8_t> maximize(n);
  for (StateIndex v = 0; v < n; ++v) maximize[v] = game.owner(v) == Player::P2;
  const kernels::EllMatrix m = detail::out_edge_matrix(game, -1, maximize);

  std::vector<std::int64_t> credit(n + 1, 0);
  std::vector<std::int64_t> next(n + 1, kernels::kInf);
  credit[n] = kernels::kInf;
  for (;;) {
    kernels::relax(m, credit, next);
    for (std::size_t v = 0; v < n; ++v) {
      next[v] = std::max<std::int64_t>(next[v], 0);
      if (next[v] > ceiling) next[v] = kernels::kInf;
    }
    if (next == credit) break;
    credit.swap(next);
  }

  std::vector<std::optional<std::int64_t>> out(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (credit[v] < kernels::kInf) out[v] = credit[v];
  }
  return out;
}

}  // namespace aeg
