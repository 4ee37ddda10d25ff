#include "bp/verifier/verifier.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "bp/core/errors.hpp"

namespace bp {

namespace {

using EntryPtr = ProgramState::EntryPtr;

/// Hash-conses entries so that the visited store and the DFS stack share one
/// copy of each distinct (b-thread, state, statement) triple. B-threads have
/// few local configurations, so this keeps big state spaces cheap.
class EntryPool {
 public:
  EntryPtr intern(ProgramState::Entry&& e) {
    auto& bucket = pool_[e.hash()];
    for (const auto& existing : bucket) {
      if (*existing == e) return existing;
    }
    bucket.push_back(std::make_shared<const ProgramState::Entry>(std::move(e)));
    return bucket.back();
  }

 private:
  std::unordered_map<std::uint64_t, std::vector<EntryPtr>> pool_;
};

/// Dispatch one selectable event against a state: advance, in registration
/// order, exactly the b-threads whose statement requested or waited for it.
/// The ordered entry list is shared across all of a state's edges.
SuccessorEdge dispatch_edge(const std::vector<EntryPtr>& ordered,
                            const BProgram& program, const Event& event,
                            EntryPool* pool) {
  std::vector<EntryPtr> next;
  next.reserve(ordered.size());
  std::optional<std::pair<std::string, std::string>> violation;
  for (const auto& entry : ordered) {
    if (!statement_matches(entry->statement(), event)) {
      next.push_back(entry);
      continue;
    }
    const BThreadDef& def = program.bthreads()[entry->def_index()];
    StepOutcome out = advance_bthread(def, entry->state(), Resume::on(event));
    if (out.result.is_sync()) {
      ProgramState::Entry advanced{def.name, entry->def_index(), def.priority,
                                   std::move(out.state),
                                   out.result.statement()};
      next.push_back(pool ? pool->intern(std::move(advanced))
                          : std::make_shared<const ProgramState::Entry>(
                                std::move(advanced)));
    } else if (out.result.is_done()) {
      // dropped: finished b-threads do not distinguish states
    } else if (!violation) {
      violation = {def.name, out.result.message()};
    }
  }
  if (violation) {
    return SuccessorEdge{event, std::nullopt, violation->first,
                         violation->second};
  }
  return SuccessorEdge{event, ProgramState(std::move(next)), "", ""};
}

struct Expansion {
  std::vector<SuccessorEdge> edges;
  /// Set only when `edges` is empty: something was requested and every
  /// requested event is blocked (the simple-strategy notion, whatever
  /// strategy drove the expansion).
  bool deadlock = false;
};

std::vector<EntryPtr> registration_order(const ProgramState& state) {
  std::vector<EntryPtr> ordered = state.entries();
  // Registration order both for determinism and so that the first-violation
  // choice matches the runner's.
  std::sort(ordered.begin(), ordered.end(),
            [](const EntryPtr& a, const EntryPtr& b) {
              return a->def_index() < b->def_index();
            });
  return ordered;
}

SyncSnapshot snapshot_of(const std::vector<EntryPtr>& ordered) {
  SyncSnapshot snap;
  snap.entries.reserve(ordered.size());
  for (const auto& entry : ordered) {
    snap.entries.push_back(
        {entry->bthread(), entry->priority(), entry->statement()});
  }
  return snap;
}

Expansion expand(const ProgramState& state, const BProgram& program,
                 const Strategy& strategy, EntryPool* pool,
                 bool classify_deadlock) {
  const std::vector<EntryPtr> ordered = registration_order(state);
  const SyncSnapshot snap = snapshot_of(ordered);
  Expansion out;
  for (const Event& event : strategy.selectable(snap)) {
    out.edges.push_back(dispatch_edge(ordered, program, event, pool));
  }
  if (out.edges.empty() && classify_deadlock) {
    out.deadlock = state.any_requests() && simple_selectable(snap).empty();
  }
  return out;
}

/// Visited-state store. Exact compares full canonical states; HashOnly keeps
/// 64-bit hashes. When the search is depth-bounded, a state reached again on
/// a strictly shorter path is re-admitted so bounded search stays complete.
class Visited {
 public:
  Visited(StoreKind kind, bool depth_aware)
      : kind_(kind), depth_aware_(depth_aware) {}

  struct Admission {
    bool expand = false;
    bool newly_seen = false;
  };

  Admission admit(const ProgramState& s, std::uint64_t depth) {
    if (kind_ == StoreKind::HashOnly) {
      auto [it, inserted] = hash_depth_.try_emplace(s.hash(), depth);
      if (inserted) return {true, true};
      if (depth_aware_ && depth < it->second) {
        it->second = depth;
        return {true, false};
      }
      return {false, false};
    }
    auto& bucket = exact_[s.hash()];
    for (auto& node : bucket) {
      if (node.state == s) {
        if (depth_aware_ && depth < node.depth) {
          node.depth = depth;
          return {true, false};
        }
        return {false, false};
      }
    }
    bucket.push_back({s, depth});
    return {true, true};
  }

 private:
  struct Node {
    ProgramState state;
    std::uint64_t depth;
  };

  StoreKind kind_;
  bool depth_aware_;
  std::unordered_map<std::uint64_t, std::vector<Node>> exact_;
  std::unordered_map<std::uint64_t, std::uint64_t> hash_depth_;
};

std::shared_ptr<const Strategy> strategy_or_simple(
    const VerificationSettings& settings) {
  if (settings.strategy) return settings.strategy;
  return std::make_shared<SimpleStrategy>();
}

/// Shortest event path from the root to any recorded deadlock state, by BFS
/// over the same successor function.
std::vector<Event> shortest_trace_to(
    const ProgramState& root, const BProgram& program,
    const Strategy& strategy, StoreKind store,
    const std::vector<ProgramState>& targets, EntryPool* pool) {
  std::unordered_set<std::uint64_t> target_hashes;
  for (const auto& t : targets) target_hashes.insert(t.hash());
  auto is_target = [&](const ProgramState& s) {
    if (!target_hashes.count(s.hash())) return false;
    if (store == StoreKind::HashOnly) return true;
    for (const auto& t : targets) {
      if (t == s) return true;
    }
    return false;
  };

  struct BfsNode {
    ProgramState state;
    std::size_t parent;
    std::optional<Event> incoming;
  };
  std::vector<BfsNode> nodes;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
  auto admit = [&](const ProgramState& s) -> bool {
    auto& bucket = seen[s.hash()];
    if (store == StoreKind::HashOnly) {
      if (!bucket.empty()) return false;
    } else {
      for (auto idx : bucket) {
        if (nodes[idx].state == s) return false;
      }
    }
    bucket.push_back(nodes.size());
    return true;
  };

  nodes.push_back({root, 0, std::nullopt});
  admit(root);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    const ProgramState state = nodes[at].state;
    if (is_target(state)) {
      std::vector<Event> trace;
      for (std::size_t i = at; nodes[i].incoming; i = nodes[i].parent) {
        trace.push_back(*nodes[i].incoming);
      }
      std::reverse(trace.begin(), trace.end());
      return trace;
    }
    for (auto& edge : expand(state, program, strategy, pool, false).edges) {
      if (edge.violated()) continue;
      if (!admit(*edge.state)) continue;
      nodes.push_back({std::move(*edge.state), at, edge.event});
      queue.push_back(nodes.size() - 1);
    }
  }
  return {};  // unreachable if targets came from the same graph
}

}  // namespace

InitialState initial_state(const BProgram& program) {
  std::vector<EntryPtr> live;
  const auto& defs = program.bthreads();
  for (std::size_t i = 0; i < defs.size(); ++i) {
    const BThreadDef& def = defs[i];
    StepOutcome out = advance_bthread(def, def.initial_state, Resume::start());
    if (out.result.is_sync()) {
      live.push_back(std::make_shared<const ProgramState::Entry>(
          ProgramState::Entry{def.name, i, def.priority, std::move(out.state),
                              out.result.statement()}));
    } else if (out.result.is_done()) {
      continue;
    } else {
      return InitialState{std::nullopt, def.name, out.result.message()};
    }
  }
  return InitialState{ProgramState(std::move(live)), "", ""};
}

std::vector<SuccessorEdge> successors(const ProgramState& state,
                                      const BProgram& program,
                                      const Strategy& strategy) {
  return expand(state, program, strategy, nullptr, false).edges;
}

VerificationResult verify(const BProgram& program,
                          const VerificationSettings& settings) {
  const auto strategy = strategy_or_simple(settings);
  VerificationResult result;
  result.store = settings.store;

  InitialState init = initial_state(program);
  if (init.violated()) {
    result.verdict = VerificationResult::Verdict::AssertionViolation;
    result.bthread = init.violating_bthread;
    result.message = init.violation_message;
    return result;
  }
  const ProgramState root = *init.state;

  EntryPool pool;
  Visited visited(settings.store, settings.max_depth.has_value());
  visited.admit(root, 0);
  result.states_visited = 1;

  std::vector<ProgramState> deadlocks;
  bool depth_pruned = false;

  struct Frame {
    ProgramState state;
    std::vector<SuccessorEdge> edges;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  std::vector<Event> path;  // path.size() == stack.size() - 1

  {
    Expansion root_expansion =
        expand(root, program, *strategy, &pool, settings.detect_deadlocks);
    if (root_expansion.deadlock) {
      deadlocks.push_back(root);
    } else {
      stack.push_back({root, std::move(root_expansion.edges), 0});
    }
  }

  while (!stack.empty()) {
    Frame& frame = stack.back();
    if (frame.next >= frame.edges.size()) {
      stack.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    SuccessorEdge& edge = frame.edges[frame.next++];
    ++result.edges_traversed;

    if (edge.violated()) {
      result.verdict = VerificationResult::Verdict::AssertionViolation;
      result.bthread = edge.violating_bthread;
      result.message = edge.violation_message;
      result.trace = path;
      result.trace.push_back(edge.event);
      return result;
    }

    const std::uint64_t depth = path.size() + 1;
    if (settings.max_depth && depth > *settings.max_depth) {
      depth_pruned = true;
      continue;
    }
    ProgramState state = std::move(*edge.state);
    const auto admission = visited.admit(state, depth);
    if (!admission.expand) continue;
    if (admission.newly_seen) ++result.states_visited;

    Expansion expansion =
        expand(state, program, *strategy, &pool, settings.detect_deadlocks);
    if (expansion.deadlock) {
      if (admission.newly_seen) deadlocks.push_back(std::move(state));
      continue;
    }
    path.push_back(edge.event);
    stack.push_back({std::move(state), std::move(expansion.edges), 0});
  }

  if (!deadlocks.empty()) {
    result.verdict = VerificationResult::Verdict::Deadlock;
    result.trace = shortest_trace_to(root, program, *strategy, settings.store,
                                     deadlocks, &pool);
    return result;
  }
  if (depth_pruned) {
    result.verdict = VerificationResult::Verdict::DepthBoundReached;
    return result;
  }
  result.verdict = VerificationResult::Verdict::Ok;
  return result;
}

VerificationResult detect_hot_cycles(const BProgram& program,
                                     const VerificationSettings& settings) {
  if (!settings.detect_hot_cycles) {
    throw ConfigError("hot-cycle detection requires detect_hot_cycles");
  }
  if (settings.store != StoreKind::Exact) {
    throw ConfigError(
        "hot-cycle detection requires the exact visited-state store");
  }
  const auto strategy = strategy_or_simple(settings);
  VerificationResult result;
  result.store = settings.store;

  InitialState init = initial_state(program);
  if (init.violated()) {
    result.verdict = VerificationResult::Verdict::AssertionViolation;
    result.bthread = init.violating_bthread;
    result.message = init.violation_message;
    return result;
  }

  // Pass 1: explore the reachable graph breadth-first, keeping node ids,
  // labeled edges, and per-state hotness. Assertion edges have no target
  // state and are dead ends for a liveness scan.
  EntryPool pool;
  std::vector<ProgramState> nodes{*init.state};
  std::vector<std::vector<std::pair<std::size_t, Event>>> adjacency;
  std::vector<std::uint64_t> depth_of{0};
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index;
  index[nodes[0].hash()].push_back(0);
  bool depth_pruned = false;

  auto find_or_add = [&](ProgramState&& s) -> std::pair<std::size_t, bool> {
    auto& bucket = index[s.hash()];
    for (auto idx : bucket) {
      if (nodes[idx] == s) return {idx, false};
    }
    bucket.push_back(nodes.size());
    nodes.push_back(std::move(s));
    return {nodes.size() - 1, true};
  };

  for (std::size_t at = 0; at < nodes.size(); ++at) {
    adjacency.emplace_back();
    auto edges = expand(nodes[at], program, *strategy, &pool, false).edges;
    if (settings.max_depth && depth_of[at] >= *settings.max_depth) {
      if (!edges.empty()) depth_pruned = true;
      continue;
    }
    for (auto& edge : edges) {
      ++result.edges_traversed;
      if (edge.violated()) continue;
      auto [to, added] = find_or_add(std::move(*edge.state));
      if (added) depth_of.push_back(depth_of[at] + 1);
      adjacency[at].push_back({to, edge.event});
    }
  }
  result.states_visited = nodes.size();

  // Pass 2: cycle scan restricted to hot states. Any back edge inside the
  // hot-induced subgraph closes a cycle whose states are all hot.
  std::vector<bool> hot(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) hot[i] = nodes[i].hot();

  enum class Color : std::uint8_t { White, Gray, Black };
  std::vector<Color> color(nodes.size(), Color::White);
  struct ScanFrame {
    std::size_t node;
    std::size_t next = 0;
    std::optional<Event> incoming;
  };

  for (std::size_t start = 0; start < nodes.size(); ++start) {
    if (!hot[start] || color[start] != Color::White) continue;
    std::vector<ScanFrame> scan{{start, 0, std::nullopt}};
    color[start] = Color::Gray;
    while (!scan.empty()) {
      ScanFrame& frame = scan.back();
      if (frame.next >= adjacency[frame.node].size()) {
        color[frame.node] = Color::Black;
        scan.pop_back();
        continue;
      }
      const auto& [to, event] = adjacency[frame.node][frame.next++];
      if (!hot[to]) continue;
      if (color[to] == Color::Gray) {
        // Found: the cycle runs from `to` up the scan stack and closes here.
        std::size_t pos = scan.size();
        while (pos > 0 && scan[pos - 1].node != to) --pos;
        std::vector<Event> cycle;
        for (std::size_t i = pos; i < scan.size(); ++i) {
          cycle.push_back(*scan[i].incoming);
        }
        cycle.push_back(event);
        result.verdict = VerificationResult::Verdict::HotCycle;
        result.cycle = std::move(cycle);
        result.trace = shortest_trace_to(nodes[0], program, *strategy,
                                         settings.store, {nodes[to]}, &pool);
        return result;
      }
      if (color[to] == Color::White) {
        color[to] = Color::Gray;
        scan.push_back({to, 0, event});
      }
    }
  }

  result.verdict = depth_pruned ? VerificationResult::Verdict::DepthBoundReached
                                : VerificationResult::Verdict::Ok;
  return result;
}

}  // namespace bp
