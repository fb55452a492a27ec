#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>

#include "aeg/classic.hpp"
#include "aeg/kernels.hpp"
#include "ell_build.hpp"

namespace aeg {

namespace {

using kernels::kInf;

struct Fraction {
  std::int64_t num;
  std::int64_t den;  // > 0
};

bool greater(const Fraction& a, const Fraction& b) {
  return static_cast<wide_int>(a.num) * b.den > static_cast<wide_int>(b.num) * a.den;
}

// Minimum cycle mean of the subgraph induced by `members` (Karp). Two sweeps
// of k relaxations keep memory linear: the first finds D_k, the second
// replays D_0..D_{k-1} and keeps the best ratio per state.
std::optional<Rational> min_cycle_mean(const GameGraph& game, const std::vector<StateIndex>& members,
                                       std::vector<std::uint32_t>& local, std::int64_t sign) {
  const std::size_t k = members.size();
  if (k == 1 && !game.has_edge(members[0], members[0])) return std::nullopt;
  for (std::size_t i = 0; i < k; ++i) local[members[i]] = static_cast<std::uint32_t>(i);
  const kernels::EllMatrix m = detail::in_edge_matrix(game, members, local, sign);
  for (StateIndex v : members) local[v] = UINT32_MAX;

  std::vector<std::int64_t> cur(k + 1, 0), next(k + 1, kInf);
  cur[k] = kInf;
  for (std::size_t step = 0; step < k; ++step) {
    kernels::relax(m, cur, next);
    cur.swap(next);
  }
  const std::vector<std::int64_t> last = cur;

  std::vector<std::optional<Fraction>> best(k);
  std::fill(cur.begin(), cur.end() - 1, 0);
  for (std::size_t step = 0; step < k; ++step) {
    for (std::size_t v = 0; v < k; ++v) {
      if (last[v] >= kInf || cur[v] >= kInf) continue;
      const Fraction cand{last[v] - cur[v], static_cast<std::int64_t>(k - step)};
      if (!best[v] || greater(cand, *best[v])) best[v] = cand;
    }
    if (step + 1 < k) {
      kernels::relax(m, cur, next);
      cur.swap(next);
    }
  }

  std::optional<Fraction> mean;
  for (std::size_t v = 0; v < k; ++v) {
    if (last[v] < kInf && best[v] && (!mean || greater(*mean, *best[v]))) mean = best[v];
  }
  if (!mean) return std::nullopt;
  return Rational(sign * mean->num, mean->den);
}

// Values when a single player (`decider`) makes every choice.
std::vector<Rational> one_player_values(const GameGraph& game, bool maximize) {
  const std::int64_t sign = maximize ? -1 : 1;
  const SccDecomposition scc = strongly_connected_components(game);
  std::vector<std::uint32_t> local(game.size(), UINT32_MAX);
  std::vector<std::optional<Rational>> comp_value(scc.components.size());

  for (std::size_t c = 0; c < scc.components.size(); ++c) {
    std::optional<Rational> best;
    if (auto own = min_cycle_mean(game, scc.components[c], local, sign)) best = sign * *own;
    for (StateIndex v : scc.components[c]) {
      for (const Arc& a : game.out(v)) {
        const auto d = scc.component[a.dst];
        if (d == c) continue;
        const Rational candidate = sign * *comp_value[d];
        if (!best || candidate < *best) best = candidate;
      }
    }
    comp_value[c] = sign * *best;
  }

  std::vector<Rational> values(game.size());
  for (StateIndex v = 0; v < game.size(); ++v) values[v] = *comp_value[scc.component[v]];
  return values;
}

Rational round_to_small_denominator(std::int64_t total, std::uint64_t horizon, std::size_t max_den) {
  const wide_int h = static_cast<wide_int>(horizon);
  std::optional<Rational> best;
  wide_int best_num = 0, best_den = 1;  // distance as a fraction
  for (std::size_t q = 1; q <= max_den; ++q) {
    const wide_int scaled = 2 * static_cast<wide_int>(total) * static_cast<wide_int>(q) + h;
    wide_int p = scaled / (2 * h);
    if (scaled % (2 * h) != 0 && scaled < 0) --p;
    wide_int diff = static_cast<wide_int>(total) * static_cast<wide_int>(q) - p * h;
    if (diff < 0) diff = -diff;
    const wide_int den = h * static_cast<wide_int>(q);
    if (!best || diff * best_den < best_num * den) {
      best = Rational(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q));
      best_num = diff;
      best_den = den;
    }
  }
  return *best;
}

std::vector<Rational> value_iteration(const GameGraph& game, const MpConfig& cfg) {
  const std::size_t n = game.size();
  const std::int64_t w = game.max_abs_weight();
  if (w == 0) return std::vector<Rational>(n, Rational(0));

  std::uint64_t horizon = 0;
  if (cfg.horizon) {
    horizon = *cfg.horizon;
  } else {
    const wide_int h = 4 * static_cast<wide_int>(n) * n * n * w;
    if (h * w > static_cast<wide_int>(kInf / 2)) throw std::overflow_error("value-iteration horizon too large");
    horizon = static_cast<std::uint64_t>(h);
  }
  if (horizon == 0) throw std::invalid_argument("value-iteration horizon must be positive");

  const Player maximizer = cfg.p1_role == Role::Minimizer ? Player::P2 : Player::P1;
  std::vector<std::uint8_t> maximize(n);
  for (StateIndex v = 0; v < n; ++v) maximize[v] = game.owner(v) == maximizer;
  const kernels::EllMatrix m = detail::out_edge_matrix(game, 1, maximize);

  std::vector<std::int64_t> cur(n + 1, 0), next(n + 1, kInf);
  cur[n] = kInf;
  for (std::uint64_t step = 0; step < horizon; ++step) {
    kernels::relax(m, cur, next);
    cur.swap(next);
  }

  std::vector<Rational> values(n);
  for (StateIndex v = 0; v < n; ++v) values[v] = round_to_small_denominator(cur[v], horizon, n);
  return values;
}

// Whether `role`'s player wants to maximize when `decider` makes all choices.
bool decider_maximizes(Player decider, Role p1_role) {
  return (decider == Player::P1) == (p1_role == Role::Maximizer);
}

GameGraph fix_arc(const GameGraph& game, StateIndex s, StateIndex dst) {
  std::vector<StateDecl> states;
  std::vector<std::vector<Arc>> arcs(game.size());
  for (StateIndex v = 0; v < game.size(); ++v) {
    states.push_back({game.name(v), game.owner(v)});
    for (const Arc& a : game.out(v)) {
      if (v != s || a.dst == dst) arcs[v].push_back(a);
    }
  }
  return GameGraph::from_parts(std::move(states), arcs, game.init());
}

// Fixes the choices of `player` one state at a time, keeping an edge only
// when every value stays the same.
MemorylessStrategy edge_fixing(const GameGraph& game, Player player, const MpConfig& cfg) {
  const std::vector<Rational> target = mp_values(game, cfg);
  GameGraph current = game;
  MemorylessStrategy strat = MemorylessStrategy::first_arc(game, player);
  for (StateIndex s = 0; s < game.size(); ++s) {
    if (game.owner(s) != player || game.out_degree(s) == 1) continue;
    bool fixed = false;
    for (const Arc& a : game.out(s)) {
      GameGraph candidate = fix_arc(current, s, a.dst);
      if (mp_values(candidate, cfg) == target) {
        current = std::move(candidate);
        strat.choice[s] = a.dst;
        fixed = true;
        break;
      }
    }
    if (!fixed) throw std::logic_error("edge fixing found no value-preserving edge at " + game.name(s));
  }
  return strat;
}

// Lasso from `from` whose cycle has mean `value`, the optimum for a
// minimizing decider under weights sign * w.
Lasso tight_cycle_lasso(const GameGraph& game, StateIndex from, const Rational& value, std::int64_t sign) {
  const std::size_t n = game.size();
  const std::int64_t p = value.num();
  const std::int64_t q = value.den();
  auto reduced = [&](const Arc& a) { return q * sign * a.weight - p; };

  std::vector<std::int64_t> dist(n, kInf);
  dist[from] = 0;
  for (std::size_t round = 0; round < n; ++round) {
    bool changed = false;
    for (StateIndex u = 0; u < n; ++u) {
      if (dist[u] >= kInf) continue;
      for (const Arc& a : game.out(u)) {
        if (dist[u] + reduced(a) < dist[a.dst]) {
          dist[a.dst] = dist[u] + reduced(a);
          changed = true;
        }
      }
    }
    if (!changed) break;
  }

  // Depth-first search for a cycle of tight edges.
  std::vector<std::uint8_t> color(n, 0);
  std::vector<StateIndex> stack_states;
  std::vector<std::size_t> stack_pos;
  std::vector<StateIndex> cycle;
  for (StateIndex root = 0; root < n && cycle.empty(); ++root) {
    if (dist[root] >= kInf || color[root] != 0) continue;
    stack_states.assign(1, root);
    stack_pos.assign(1, 0);
    color[root] = 1;
    while (!stack_states.empty() && cycle.empty()) {
      const StateIndex u = stack_states.back();
      const auto arcs = game.out(u);
      std::size_t& i = stack_pos.back();
      if (i == arcs.size()) {
        color[u] = 2;
        stack_states.pop_back();
        stack_pos.pop_back();
        continue;
      }
      const Arc& a = arcs[i++];
      if (dist[a.dst] >= kInf || dist[u] + reduced(a) != dist[a.dst]) continue;
      if (color[a.dst] == 1) {
        auto it = std::find(stack_states.begin(), stack_states.end(), a.dst);
        cycle.assign(it, stack_states.end());
      } else if (color[a.dst] == 0) {
        color[a.dst] = 1;
        stack_states.push_back(a.dst);
        stack_pos.push_back(0);
      }
    }
  }
  if (cycle.empty()) throw std::logic_error("no optimal cycle found");

  std::vector<std::int64_t> on_cycle(n, -1);
  for (std::size_t i = 0; i < cycle.size(); ++i) on_cycle[cycle[i]] = static_cast<std::int64_t>(i);
  std::vector<StateIndex> parent(n, kNoState);
  std::vector<bool> seen(n, false);
  std::deque<StateIndex> queue{from};
  seen[from] = true;
  StateIndex hit = kNoState;
  while (!queue.empty()) {
    const StateIndex u = queue.front();
    queue.pop_front();
    if (on_cycle[u] >= 0) {
      hit = u;
      break;
    }
    for (const Arc& a : game.out(u)) {
      if (!seen[a.dst]) {
        seen[a.dst] = true;
        parent[a.dst] = u;
        queue.push_back(a.dst);
      }
    }
  }

  Lasso lasso;
  for (StateIndex v = parent[hit]; v != kNoState; v = parent[v]) lasso.prefix.push_back(v);
  std::reverse(lasso.prefix.begin(), lasso.prefix.end());
  const auto start = static_cast<std::size_t>(on_cycle[hit]);
  lasso.cycle.assign(cycle.begin() + static_cast<std::ptrdiff_t>(start), cycle.end());
  lasso.cycle.insert(lasso.cycle.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(start));
  return lasso;
}

}  // namespace

std::vector<Rational> mp_values(const GameGraph& game, const MpConfig& cfg) {
  if (!cfg.force_value_iteration) {
    if (auto decider = game.deciding_player()) return one_player_values(game, decider_maximizes(*decider, cfg.p1_role));
  }
  return value_iteration(game, cfg);
}

SolveResult mp_decide(const GameGraph& game, StateIndex from, const Rational& t, const MpConfig& cfg) {
  const std::vector<Rational> values = mp_values(game, cfg);
  SolveResult result;
  result.value = values[from];
  const bool p1_wins = cfg.p1_role == Role::Minimizer ? values[from] <= t : values[from] >= t;
  result.winner = p1_wins ? Player::P1 : Player::P2;

  MemorylessStrategy p1 = MemorylessStrategy::first_arc(game, Player::P1);
  MemorylessStrategy p2 = MemorylessStrategy::first_arc(game, Player::P2);
  const auto decider = cfg.force_value_iteration ? std::nullopt : game.deciding_player();
  if (decider) {
    const bool maximize = decider_maximizes(*decider, cfg.p1_role);
    const std::int64_t sign = maximize ? -1 : 1;
    const Lasso lasso = tight_cycle_lasso(game, from, sign * values[from], sign);
    (*decider == Player::P1 ? p1 : p2) = strategy_from_lasso(game, lasso, *decider);
  } else {
    p1 = edge_fixing(game, Player::P1, cfg);
    p2 = edge_fixing(game, Player::P2, cfg);
  }
  result.witness_play = outcome_lasso(game.with_init(from), p1, p2);
  result.witness_p1 = p1;
  result.witness_p2 = p2;
  return result;
}

}  // namespace aeg
