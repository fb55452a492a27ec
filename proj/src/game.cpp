#include "aeg/game.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include "aeg/errors.hpp"

namespace aeg {

std::string_view to_string(Player p) { return p == Player::P1 ? "P1" : "P2"; }

std::vector<Violation> validate(const GameDescription& desc) {
  std::vector<Violation> report;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < desc.states.size(); ++i) {
    if (!index.emplace(desc.states[i].name, i).second) {
      report.push_back({Violation::Kind::DuplicateState, "duplicate state '" + desc.states[i].name + "'"});
    }
  }

  std::vector<std::size_t> out_degree(desc.states.size(), 0);
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : desc.edges) {
    bool endpoints_ok = true;
    for (const auto* end : {&e.src, &e.dst}) {
      if (!index.contains(*end)) {
        report.push_back({Violation::Kind::UnknownState,
                          "edge " + e.src + " -> " + e.dst + " uses undeclared state '" + *end + "'"});
        endpoints_ok = false;
      }
    }
    if (!seen.emplace(e.src, e.dst).second) {
      report.push_back({Violation::Kind::DuplicateEdge, "duplicate edge " + e.src + " -> " + e.dst});
      continue;
    }
    if (endpoints_ok) ++out_degree[index.at(e.src)];
  }

  for (std::size_t i = 0; i < desc.states.size(); ++i) {
    if (out_degree[i] == 0 && index.at(desc.states[i].name) == i) {
      report.push_back({Violation::Kind::BlockingState, "blocking state '" + desc.states[i].name + "' has no outgoing edge"});
    }
  }

  if (desc.init.empty()) {
    report.push_back({Violation::Kind::BadInit, "missing init"});
  } else if (!index.contains(desc.init)) {
    report.push_back({Violation::Kind::BadInit, "init '" + desc.init + "' is not a declared state"});
  }
  return report;
}

namespace {

[[noreturn]] void throw_report(const std::vector<Violation>& report) {
  std::ostringstream msg;
  msg << "invalid game:";
  for (const auto& v : report) msg << "\n  " << v.message;
  throw InputError(msg.str());
}

}  // namespace

GameGraph GameGraph::build(const GameDescription& desc) {
  auto report = validate(desc);
  if (!report.empty()) throw_report(report);

  std::unordered_map<std::string, StateIndex> index;
  for (std::size_t i = 0; i < desc.states.size(); ++i) index.emplace(desc.states[i].name, static_cast<StateIndex>(i));
  std::vector<std::vector<Arc>> arcs(desc.states.size());
  for (const auto& e : desc.edges) arcs[index.at(e.src)].push_back({index.at(e.dst), e.weight});
  return from_parts(desc.states, arcs, index.at(desc.init));
}

GameGraph GameGraph::from_parts(std::vector<StateDecl> states, const std::vector<std::vector<Arc>>& arcs,
                                StateIndex init) {
  if (arcs.size() != states.size()) throw InputError("arc table does not match state table");
  std::vector<Violation> report;
  GameGraph g;
  g.states_ = std::move(states);
  const auto n = g.states_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.index_.emplace(g.states_[i].name, static_cast<StateIndex>(i)).second) {
      report.push_back({Violation::Kind::DuplicateState, "duplicate state '" + g.states_[i].name + "'"});
    }
  }
  if (init >= n) report.push_back({Violation::Kind::BadInit, "init is not a declared state"});

  g.offsets_.reserve(n + 1);
  g.offsets_.push_back(0);
  for (std::size_t s = 0; s < n; ++s) {
    if (arcs[s].empty()) {
      report.push_back({Violation::Kind::BlockingState, "blocking state '" + g.states_[s].name + "' has no outgoing edge"});
    }
    std::set<StateIndex> targets;
    for (const Arc& a : arcs[s]) {
      if (a.dst >= n) {
        report.push_back({Violation::Kind::UnknownState, "edge from '" + g.states_[s].name + "' to an undeclared state"});
        continue;
      }
      if (!targets.insert(a.dst).second) {
        report.push_back({Violation::Kind::DuplicateEdge,
                          "duplicate edge " + g.states_[s].name + " -> " + g.states_[a.dst].name});
        continue;
      }
      g.arcs_.push_back(a);
      const std::int64_t mag = a.weight < 0 ? -a.weight : a.weight;
      g.max_abs_weight_ = std::max(g.max_abs_weight_, mag);
    }
    g.offsets_.push_back(g.arcs_.size());
  }
  if (!report.empty()) throw_report(report);
  g.init_ = init;
  return g;
}

std::optional<std::int64_t> GameGraph::weight(StateIndex src, StateIndex dst) const {
  for (const Arc& a : out(src)) {
    if (a.dst == dst) return a.weight;
  }
  return std::nullopt;
}

std::optional<StateIndex> GameGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

StateIndex GameGraph::at(std::string_view name) const {
  auto s = find(name);
  if (!s) throw InputError("unknown state '" + std::string(name) + "'");
  return *s;
}

std::optional<Player> GameGraph::sole_owner() const {
  const Player first = states_.front().owner;
  for (const auto& s : states_) {
    if (s.owner != first) return std::nullopt;
  }
  return first;
}

std::optional<Player> GameGraph::deciding_player() const {
  bool p1_chooses = false;
  bool p2_chooses = false;
  for (StateIndex s = 0; s < size(); ++s) {
    if (out_degree(s) <= 1) continue;
    (owner(s) == Player::P1 ? p1_chooses : p2_chooses) = true;
  }
  if (p1_chooses && p2_chooses) return std::nullopt;
  if (p2_chooses) return Player::P2;
  if (p1_chooses) return Player::P1;
  return sole_owner().value_or(Player::P1);
}

GameDescription GameGraph::describe() const {
  GameDescription d;
  d.states = states_;
  for (StateIndex s = 0; s < size(); ++s) {
    for (const Arc& a : out(s)) d.edges.push_back({name(s), name(a.dst), a.weight});
  }
  d.init = name(init_);
  return d;
}

GameGraph GameGraph::with_init(StateIndex s) const {
  if (s >= size()) throw InputError("init is not a declared state");
  GameGraph g = *this;
  g.init_ = s;
  return g;
}

GameGraph GameGraph::with_owner(Player p) const {
  GameGraph g = *this;
  for (auto& s : g.states_) s.owner = p;
  return g;
}

GameGraph GameGraph::negated() const {
  GameGraph g = *this;
  for (auto& a : g.arcs_) a.weight = -a.weight;
  return g;
}

bool equivalent(const GameGraph& a, const GameGraph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  if (a.name(a.init()) != b.name(b.init())) return false;
  for (StateIndex s = 0; s < a.size(); ++s) {
    auto t = b.find(a.name(s));
    if (!t || b.owner(*t) != a.owner(s)) return false;
    for (const Arc& arc : a.out(s)) {
      auto dst = b.find(a.name(arc.dst));
      if (!dst || b.weight(*t, *dst) != arc.weight) return false;
    }
  }
  return true;
}

std::vector<bool> reachable_from(const GameGraph& game, StateIndex from) {
  std::vector<bool> seen(game.size(), false);
  std::vector<StateIndex> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    StateIndex s = stack.back();
    stack.pop_back();
    for (const Arc& a : game.out(s)) {
      if (!seen[a.dst]) {
        seen[a.dst] = true;
        stack.push_back(a.dst);
      }
    }
  }
  return seen;
}

SccDecomposition strongly_connected_components(const GameGraph& game) {
  // Iterative Tarjan.
  const auto n = game.size();
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<StateIndex> stack;
  SccDecomposition out;
  out.component.assign(n, 0);
  std::uint32_t counter = 0;

  struct Frame {
    StateIndex state;
    std::size_t next_arc;
  };
  std::vector<Frame> call;

  for (StateIndex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      auto arcs = game.out(f.state);
      if (f.next_arc < arcs.size()) {
        const StateIndex w = arcs[f.next_arc++].dst;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.state] = std::min(low[f.state], index[w]);
        }
        continue;
      }
      const StateIndex v = f.state;
      call.pop_back();
      if (!call.empty()) low[call.back().state] = std::min(low[call.back().state], low[v]);
      if (low[v] == index[v]) {
        std::vector<StateIndex> comp;
        StateIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.component[w] = static_cast<std::uint32_t>(out.components.size());
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
      }
    }
  }
  return out;
}

}  // namespace aeg
