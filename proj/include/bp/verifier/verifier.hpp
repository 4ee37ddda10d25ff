#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bp/core/bthread.hpp"
#include "bp/strategy/strategy.hpp"
#include "bp/verifier/program_state.hpp"

namespace bp {

/// Visited-state deduplication. Exact retains full canonical states and never
/// reports a false "seen"; HashOnly retains 64-bit hashes and may (on a
/// collision), trading soundness for memory — results carry the store kind so
/// reports can say so.
enum class StoreKind { Exact, HashOnly };

struct VerificationSettings {
  /// Only the strategy's selectable method participates in verification.
  std::shared_ptr<const Strategy> strategy;
  StoreKind store = StoreKind::Exact;
  /// Bounds counterexample length; search deeper than this is pruned.
  std::optional<std::uint64_t> max_depth;
  bool detect_hot_cycles = false;
  /// Deadlock states can be an expected artifact of assumption b-threads
  /// (the maze simplifier strands the walker on purpose); turning this off
  /// makes them plain leaves.
  bool detect_deadlocks = true;
};

struct VerificationResult {
  enum class Verdict {
    Ok,
    AssertionViolation,
    Deadlock,
    HotCycle,
    DepthBoundReached,
  };

  Verdict verdict = Verdict::Ok;
  std::string bthread;  // AssertionViolation: who asserted
  std::string message;  // AssertionViolation: what it said
  /// Counterexample: the event sequence from the initial state to the
  /// violating state. For HotCycle this is the prefix to the cycle.
  std::vector<Event> trace;
  std::vector<Event> cycle;  // HotCycle only
  std::uint64_t states_visited = 0;
  std::uint64_t edges_traversed = 0;
  StoreKind store = StoreKind::Exact;
};

/// All b-threads advanced once with Start. A violation during setup is an
/// immediate AssertionViolation with an empty trace.
struct InitialState {
  std::optional<ProgramState> state;  // absent iff setup violated
  std::string violating_bthread;
  std::string violation_message;

  bool violated() const { return !state.has_value(); }
};

InitialState initial_state(const BProgram& program);

/// One outgoing edge of a program state: the selected event and either the
/// canonical successor state, or the violation that dispatching it raised.
struct SuccessorEdge {
  Event event;
  std::optional<ProgramState> state;  // absent iff violation
  std::string violating_bthread;
  std::string violation_message;

  bool violated() const { return !state.has_value(); }
};

/// Expands a state: for each event in the strategy's selectable list, in its
/// deterministic order, dispatch per the runtime semantics and advance the
/// affected b-threads to their next synchronization points.
std::vector<SuccessorEdge> successors(const ProgramState& state,
                                      const BProgram& program,
                                      const Strategy& strategy);

/// Explicit-state model checking over the synchronization-point state graph
/// of the unmodified b-program. No external queue participates: environments
/// and requirements must be modeled as b-threads.
///
/// Traversal is an iterative depth-first search with an explicit stack. The
/// first assertion violation encountered terminates the search with its event
/// trace. Deadlock states (something requested, every requested event
/// blocked) have no successors, so the search records them, finishes the
/// reachable graph, and reports the one closest to the root with a
/// shortest-path counterexample — which also makes states_visited a property
/// of the program rather than of traversal order.
VerificationResult verify(const BProgram& program,
                          const VerificationSettings& settings);

/// Liveness pass: searches for a reachable cycle whose states are all hot.
/// Requires settings.detect_hot_cycles and an Exact store (cycle detection
/// needs faithful state identity); otherwise a ConfigError. Assertion-edge
/// targets are dead ends for this analysis; deadlocks are ignored.
VerificationResult detect_hot_cycles(const BProgram& program,
                                     const VerificationSettings& settings);

}  // namespace bp
