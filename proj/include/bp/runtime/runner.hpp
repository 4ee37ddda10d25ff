#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bp/core/bthread.hpp"
#include "bp/runtime/listener.hpp"
#include "bp/runtime/queue.hpp"
#include "bp/strategy/strategy.hpp"

namespace bp {

struct RunnerConfig {
  std::shared_ptr<const Strategy> strategy;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> max_events;
  /// In daemon mode the runner parks at quiescence until an external event
  /// arrives or the queue closes, instead of terminating.
  bool daemon = false;
};

struct RunResult {
  std::vector<Event> trace;
  EndReason termination = EndReason::Completed;
  // AssertionFailed only:
  std::string failed_bthread;
  std::string failure_message;
};

/// Executes the b-program loop: activate every b-thread with Start, then
/// repeatedly collect statements, select a requested-and-not-blocked event
/// via the strategy, and advance the b-threads that requested or waited for
/// it. When no internal event is selectable, the first queued external event
/// not blocked by any current statement is dispatched (super-step); blocked
/// externals stay queued in arrival order.
///
/// Termination: Deadlock when something is requested, everything requested is
/// blocked, and no external can be dispatched; Completed when no b-thread is
/// alive, or nothing is requested and no external input remains (outside
/// daemon mode), or the queue closes while a daemon runner is parked;
/// EventLimit when max_events is reached; AssertionFailed as soon as any
/// step yields a violation.
RunResult run(const BProgram& program, const RunnerConfig& config,
              EventQueue& external,
              const std::vector<RunnerListener*>& listeners = {});

/// Convenience entry point for programs without environment input.
RunResult run(const BProgram& program, const RunnerConfig& config);

}  // namespace bp
