#include "aeg/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "aeg/errors.hpp"

namespace aeg::fixtures {

namespace {

GameGraph one_player(const std::vector<std::string>& names, const std::vector<EdgeDecl>& edges,
                     const std::string& init) {
  GameDescription d;
  for (const auto& n : names) d.states.push_back({n, Player::P1});
  d.edges = edges;
  d.init = init;
  return GameGraph::build(d);
}

void require_upper(std::int64_t upper) {
  if (upper < 1) throw InputError("family parameter U must be at least 1");
}

}  // namespace

GameGraph fig2a() {
  return one_player({"v0", "v1", "v2", "v3", "v4"},
                    {{"v0", "v1", 1}, {"v1", "v2", 2}, {"v2", "v4", 2}, {"v4", "v3", -2}, {"v3", "v1", -2}}, "v0");
}

GameGraph fig2b() {
  return one_player({"v0", "v1", "v2", "v2b", "v3", "v3b", "v4"},
                    {{"v0", "v1", 1},
                     {"v1", "v2", 2},
                     {"v2", "v2b", 2},
                     {"v2b", "v4", 0},
                     {"v4", "v3b", 0},
                     {"v3b", "v3", -2},
                     {"v3", "v1", -2}},
                    "v0");
}

GameGraph fig3() {
  return one_player({"s", "sp", "spp"}, {{"s", "sp", -1}, {"sp", "s", 1}, {"s", "spp", 1}, {"spp", "s", -1}}, "s");
}

GameGraph fig4() {
  return one_player({"a", "b", "c"}, {{"a", "a", 2}, {"a", "c", 1}, {"c", "a", 0}, {"a", "b", -3}, {"b", "a", 0}},
                    "a");
}

GameGraph mem_p1(std::int64_t upper) {
  require_upper(upper);
  return one_player({"s", "sp"}, {{"s", "s", -upper}, {"s", "sp", 1}, {"sp", "s", 0}}, "s");
}

GameGraph mem_p2(std::int64_t upper) {
  require_upper(upper);
  GameDescription d;
  for (const char* n : {"s", "a", "b", "c", "d", "e", "f", "g"}) {
    d.states.push_back({n, std::string(n) == "a" ? Player::P2 : Player::P1});
  }
  d.edges = {{"s", "a", 1}, {"a", "b", -1}, {"a", "c", 1}, {"d", "a", 0}, {"e", "a", 0}, {"f", "a", 0},
             {"b", "g", 0}, {"c", "g", 0},  {"g", "d", -upper}, {"g", "e", 0}, {"g", "f", 1}};
  d.init = "s";
  return GameGraph::build(d);
}

CountdownGame countdown_win() { return {{"v"}, {{"v", 1, "v"}, {"v", 2, "v"}}, "v", 3}; }

CountdownGame countdown_loss() { return {{"v"}, {{"v", 2, "v"}}, "v", 1}; }

GameGraph random_game(const RandomSpec& spec) {
  if (spec.states == 0) throw InputError("random games need at least one state");
  if (spec.max_weight < 0) throw InputError("maximal weight must be nonnegative");
  if (!(spec.p2_ratio >= 0.0 && spec.p2_ratio <= 1.0)) throw InputError("P2 ratio must lie in [0, 1]");
  if (!(spec.balance >= 0.0 && spec.balance <= 1.0)) throw InputError("balance must lie in [0, 1]");
  const std::size_t n = spec.states;
  const std::size_t cap = std::max<std::size_t>(1, spec.max_out_degree);

  std::mt19937_64 rng(spec.seed);
  auto pick = [&rng](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  std::uniform_int_distribution<std::int64_t> weight(-spec.max_weight, spec.max_weight);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const auto p2_count = static_cast<std::size_t>(std::llround(static_cast<double>(n) * spec.p2_ratio));
  std::vector<Player> owner(n, Player::P1);
  for (std::size_t i = 0; i < p2_count; ++i) owner[order[i]] = Player::P2;

  std::vector<std::set<std::size_t>> succ(n);
  std::vector<std::size_t> open;
  for (std::size_t v = 1; v < n; ++v) {
    open.clear();
    for (std::size_t u = 0; u < v; ++u) {
      if (succ[u].size() < cap) open.push_back(u);
    }
    succ[open[pick(0, open.size() - 1)]].insert(v);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (succ[v].empty()) succ[v].insert(pick(0, n - 1));
    const std::size_t room = succ[v].size() < cap ? cap - succ[v].size() : 0;
    const std::size_t extra = pick(0, std::min(room, n - succ[v].size()));
    for (std::size_t k = 0; k < extra; ++k) succ[v].insert(pick(0, n - 1));
  }

  std::vector<std::int64_t> potential(n, 0);
  if (spec.balance > 0.0) {
    std::uniform_int_distribution<std::int64_t> level(0, spec.max_weight);
    for (auto& p : potential) p = level(rng);
  }
  std::bernoulli_distribution balanced(spec.balance);

  GameDescription d;
  for (std::size_t v = 0; v < n; ++v) d.states.push_back({"s" + std::to_string(v), owner[v]});
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : succ[v]) {
      const std::int64_t c = balanced(rng) ? potential[w] - potential[v] : weight(rng);
      d.edges.push_back({d.states[v].name, d.states[w].name, c});
    }
  }
  d.init = "s0";
  return GameGraph::build(d);
}

Lasso lasso(const GameGraph& game, const std::vector<std::string>& prefix, const std::vector<std::string>& cycle) {
  Lasso l;
  for (const auto& n : prefix) l.prefix.push_back(game.at(n));
  for (const auto& n : cycle) l.cycle.push_back(game.at(n));
  check_lasso(game, l);
  return l;
}

Lasso fig2a_play(const GameGraph& g) { return lasso(g, {"v0"}, {"v1", "v2", "v4", "v3"}); }

Lasso fig2b_play(const GameGraph& g) { return lasso(g, {"v0"}, {"v1", "v2", "v2b", "v4", "v3b", "v3"}); }

Lasso fig4_play(const GameGraph& g, int which) {
  switch (which) {
    case 1:
      return lasso(g, {}, {"a", "c", "a", "c", "a", "c", "a", "b"});
    case 2:
      return lasso(g, {}, {"a", "a", "c", "a", "b"});
    case 3:
      return lasso(g, {}, {"a", "c", "a", "a", "b"});
    default:
      throw InputError("fig4 plays are numbered 1 to 3");
  }
}

std::optional<GameGraph> named(const std::string& name) {
  if (name == "fig2a") return fig2a();
  if (name == "fig2b") return fig2b();
  if (name == "fig3") return fig3();
  if (name == "fig4") return fig4();
  return std::nullopt;
}

GameGraph generate(const std::string& family, const GenParams& p) {
  if (auto g = named(family)) return *g;
  if (family == "memP1") return mem_p1(p.upper);
  if (family == "memP2") return mem_p2(p.upper);
  if (family == "random") return random_game({p.seed, p.states, p.max_weight, p.p2_ratio, 3, p.balance});
  if (family == "countdown") return countdown_to_ael(countdown_win()).game;
  if (family == "countdown-loss") return countdown_to_ael(countdown_loss()).game;
  throw InputError("unknown family '" + family + "'");
}

}  // namespace aeg::fixtures
