#include "aeg/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "aeg/errors.hpp"

namespace aeg {

namespace {

class NamePool {
 public:
  explicit NamePool(const GameGraph& game) {
    for (StateIndex s = 0; s < game.size(); ++s) used_.insert(game.name(s));
  }
  NamePool() = default;

  std::string claim(std::string name) {
    while (!used_.insert(name).second) name += '_';
    return name;
  }

 private:
  std::unordered_set<std::string> used_;
};

std::string pair_name(const std::string& base, std::int64_t charge) {
  return "(" + base + "," + std::to_string(charge) + ")";
}

}  // namespace

MpToAeImage mp_to_ae(const GameGraph& game) {
  const std::size_t n = game.size();
  NamePool names(game);
  std::vector<StateDecl> states;
  std::vector<std::vector<Arc>> arcs(n);
  states.reserve(n + game.edge_count());
  for (StateIndex s = 0; s < n; ++s) states.push_back({game.name(s), game.owner(s)});

  for (StateIndex u = 0; u < n; ++u) {
    for (const Arc& a : game.out(u)) {
      const auto mid = static_cast<StateIndex>(states.size());
      states.push_back({names.claim("m(" + game.name(u) + "," + game.name(a.dst) + ")"), game.owner(u)});
      arcs[u].push_back({mid, 2 * a.weight});
      arcs.push_back({{a.dst, -2 * a.weight}});
    }
  }

  MpToAeImage image{GameGraph::from_parts(std::move(states), arcs, game.init()), {}};
  image.state_map.resize(n);
  for (StateIndex s = 0; s < n; ++s) image.state_map[s] = s;
  return image;
}

ExpandedArena ExpandedArena::build(const GameGraph& base, std::int64_t upper) {
  if (upper < 0) throw InputError("energy upper bound must be nonnegative");
  const std::size_t n = base.size();
  const auto width = static_cast<std::size_t>(upper) + 1;
  const auto node = [width](StateIndex s, std::int64_t c) { return static_cast<StateIndex>(s * width + c); };
  const StateIndex sink = static_cast<StateIndex>(n * width);

  std::vector<StateDecl> states;
  std::vector<std::vector<Arc>> arcs(n * width + 1);
  states.reserve(n * width + 1);
  for (StateIndex s = 0; s < n; ++s) {
    for (std::int64_t c = 0; c <= upper; ++c) {
      states.push_back({pair_name(base.name(s), c), base.owner(s)});
      auto& out = arcs[node(s, c)];
      bool breached = false;
      for (const Arc& a : base.out(s)) {
        const std::int64_t next = c + a.weight;
        if (next >= 0 && next <= upper) {
          out.push_back({node(a.dst, next), a.weight});
        } else if (!breached) {
          out.push_back({sink, 1});
          breached = true;
        }
      }
    }
  }
  states.push_back({"sink", Player::P1});
  arcs[sink].push_back({sink, 1});

  ExpandedArena arena(GameGraph::from_parts(std::move(states), arcs, node(base.init(), 0)));
  arena.upper_ = upper;
  arena.sink_ = sink;
  for (StateIndex s = 0; s < n; ++s) arena.base_names_.push_back(base.name(s));
  arena.labels_.reserve(n * width + 1);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::int64_t c = 0; c <= upper; ++c) arena.labels_.emplace_back(s, c);
  }
  arena.labels_.emplace_back(0, -1);
  return arena;
}

ExpandedArena ExpandedArena::from_game(const GameGraph& expanded) {
  ExpandedArena arena(expanded);
  std::map<std::string, std::size_t> base_index;
  arena.labels_.resize(expanded.size(), {0, -1});
  for (StateIndex v = 0; v < expanded.size(); ++v) {
    const std::string& name = expanded.name(v);
    if (name == "sink") {
      arena.sink_ = v;
      continue;
    }
    const auto comma = name.rfind(',');
    std::int64_t charge = -1;
    if (name.size() < 5 || name.front() != '(' || name.back() != ')' || comma == std::string::npos || comma < 2) {
      throw InputError("state '" + name + "' is not an expanded-arena node");
    }
    const char* first = name.data() + comma + 1;
    const char* last = name.data() + name.size() - 1;
    const auto [ptr, ec] = std::from_chars(first, last, charge);
    if (ec != std::errc() || ptr != last || charge < 0) {
      throw InputError("state '" + name + "' is not an expanded-arena node");
    }
    const std::string base = name.substr(1, comma - 1);
    auto [it, fresh] = base_index.emplace(base, arena.base_names_.size());
    if (fresh) arena.base_names_.push_back(base);
    arena.labels_[v] = {it->second, charge};
    arena.upper_ = std::max(arena.upper_, charge);
  }
  if (arena.sink_ == kNoState) throw InputError("expanded arena has no 'sink' state");
  return arena;
}

std::optional<StateIndex> ExpandedArena::node(const std::string& name, std::int64_t charge) const {
  return game_.find(pair_name(name, charge));
}

GameGraph expand_lu(const GameGraph& game, std::int64_t upper) { return ExpandedArena::build(game, upper).game(); }

GameGraph ae_to_mp_reweight(const ExpandedArena& arena, const Rational& t) {
  const GameGraph& g = arena.game();
  const std::int64_t penalty = t.ceil() + 1;
  std::vector<StateDecl> states;
  std::vector<std::vector<Arc>> arcs(g.size());
  for (StateIndex v = 0; v < g.size(); ++v) {
    states.push_back({g.name(v), g.owner(v)});
    const std::int64_t w = arena.is_sink(v) ? penalty : arena.charge(v);
    for (const Arc& a : g.out(v)) arcs[v].push_back({a.dst, w});
  }
  return GameGraph::from_parts(std::move(states), arcs, g.init());
}

GameGraph ae_to_mp_reweight(const GameGraph& expanded, const Rational& t) {
  return ae_to_mp_reweight(ExpandedArena::from_game(expanded), t);
}

std::int64_t ael1p_upper_bound(const GameGraph& game, const Rational& t) {
  const wide_int n = static_cast<wide_int>(game.max_abs_weight()) * (static_cast<wide_int>(game.size()) + 2);
  const wide_int bound = static_cast<wide_int>(std::max<std::int64_t>(0, t.ceil())) + n * n + n * n * n;
  if (n > 2'000'000 || bound > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("energy bound does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(bound);
}

CountdownImage countdown_to_ael(const CountdownGame& cd) {
  if (cd.counter <= 0) throw InputError("countdown counter must be positive");
  std::map<std::string, StateIndex> index;
  std::vector<StateDecl> states;
  NamePool pool;
  for (const auto& v : cd.states) {
    if (index.contains(v)) throw InputError("duplicate countdown state '" + v + "'");
    index.emplace(v, 0);
    pool.claim(v);
  }
  if (!index.contains(cd.init)) throw InputError("countdown init '" + cd.init + "' is not a state");

  // Durations per state, then the P2 node for each (state, duration).
  std::map<std::pair<std::string, std::int64_t>, std::vector<std::string>> choices;
  for (const auto& e : cd.edges) {
    if (e.duration <= 0) throw InputError("countdown durations must be positive");
    if (!index.contains(e.src) || !index.contains(e.dst)) throw InputError("countdown edge uses an unknown state");
    auto& succ = choices[{e.src, e.duration}];
    if (std::find(succ.begin(), succ.end(), e.dst) == succ.end()) succ.push_back(e.dst);
  }

  const std::string start = pool.claim("start");
  const std::string stop = pool.claim("stop");
  states.push_back({start, Player::P1});
  for (const auto& v : cd.states) {
    index[v] = static_cast<StateIndex>(states.size());
    states.push_back({v, Player::P1});
  }
  std::map<std::pair<std::string, std::int64_t>, StateIndex> choice_node;
  for (const auto& [key, succ] : choices) {
    choice_node[key] = static_cast<StateIndex>(states.size());
    states.push_back({pool.claim(pair_name(key.first, key.second)), Player::P2});
  }
  const auto stop_index = static_cast<StateIndex>(states.size());
  states.push_back({stop, Player::P1});

  std::vector<std::vector<Arc>> arcs(states.size());
  arcs[0].push_back({index.at(cd.init), cd.counter});
  for (const auto& [key, succ] : choices) {
    const StateIndex node = choice_node.at(key);
    arcs[index.at(key.first)].push_back({node, -key.second});
    for (const auto& dst : succ) arcs[node].push_back({index.at(dst), 0});
  }
  for (const auto& v : cd.states) arcs[index.at(v)].push_back({stop_index, 0});
  arcs[stop_index].push_back({stop_index, 0});

  return {GameGraph::from_parts(std::move(states), arcs, 0), Rational(0)};
}

MooreStrategy lift_strategy(const ExpandedArena& arena, const MemorylessStrategy& memless, const GameGraph& base) {
  const GameGraph& g = arena.game();
  check_strategy(g, memless);
  const Player owner = memless.owner;

  std::vector<bool> seen(g.size(), false);
  std::deque<StateIndex> queue{g.init()};
  seen[g.init()] = true;
  std::vector<StateIndex> order;
  const auto successors = [&](StateIndex v) {
    std::vector<StateIndex> next;
    if (g.owner(v) == owner) {
      next.push_back(memless.choice[v]);
    } else {
      for (const Arc& a : g.out(v)) next.push_back(a.dst);
    }
    return next;
  };
  while (!queue.empty()) {
    const StateIndex v = queue.front();
    queue.pop_front();
    if (arena.is_sink(v)) continue;
    order.push_back(v);
    for (StateIndex w : successors(v)) {
      if (arena.is_sink(w)) throw InputError("strategy lets the play reach the sink from " + g.name(v));
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }

  std::vector<std::int64_t> charges;
  for (StateIndex v : order) charges.push_back(arena.charge(v));
  std::sort(charges.begin(), charges.end());
  charges.erase(std::unique(charges.begin(), charges.end()), charges.end());
  std::vector<std::string> labels;
  for (auto c : charges) labels.push_back(std::to_string(c));
  const auto memory_of = [&](std::int64_t c) {
    return static_cast<MooreStrategy::Memory>(std::lower_bound(charges.begin(), charges.end(), c) - charges.begin());
  };

  MooreStrategy machine(owner, labels, memory_of(0));
  for (StateIndex v : order) {
    const StateIndex s = base.at(arena.base_name(v));
    const auto m = memory_of(arena.charge(v));
    if (g.owner(v) == owner) machine.set_output(m, s, base.at(arena.base_name(memless.choice[v])));
    for (StateIndex w : successors(v)) {
      const auto next = memory_of(arena.charge(w));
      if (next != m) machine.set_update(m, s, base.at(arena.base_name(w)), next);
    }
  }
  return machine;
}

}  // namespace aeg
