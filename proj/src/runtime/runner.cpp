#include "bp/runtime/runner.hpp"

#include <algorithm>

#include "bp/core/errors.hpp"

namespace bp {

namespace {

struct LiveThread {
  const BThreadDef* def;
  Value state;
  SyncStatement stmt;
};

SyncSnapshot snapshot_of(const std::vector<LiveThread>& live) {
  SyncSnapshot snap;
  snap.entries.reserve(live.size());
  for (const auto& t : live) {
    snap.entries.push_back({t.def->name, t.def->priority, t.stmt});
  }
  return snap;
}

class Notifier {
 public:
  explicit Notifier(const std::vector<RunnerListener*>& listeners)
      : listeners_(listeners) {}

  template <typename Fn>
  void each(Fn fn) const {
    for (auto* l : listeners_) {
      if (l != nullptr) fn(*l);
    }
  }

 private:
  const std::vector<RunnerListener*>& listeners_;
};

}  // namespace

RunResult run(const BProgram& program, const RunnerConfig& config,
              EventQueue& external,
              const std::vector<RunnerListener*>& listeners) {
  if (!config.strategy) {
    throw ConfigError("runner requires an event selection strategy");
  }
  Notifier notify(listeners);
  RandomSource rng(config.seed);
  RunResult result;

  auto finish = [&](EndReason reason) -> RunResult& {
    result.termination = reason;
    notify.each([&](RunnerListener& l) { l.ended(reason); });
    return result;
  };

  notify.each([&](RunnerListener& l) { l.started(program.name()); });

  std::vector<LiveThread> live;
  live.reserve(program.bthreads().size());
  for (const auto& def : program.bthreads()) {
    StepOutcome out = advance_bthread(def, def.initial_state, Resume::start());
    if (out.result.is_sync()) {
      live.push_back({&def, std::move(out.state), out.result.statement()});
    } else if (out.result.is_done()) {
      notify.each([&](RunnerListener& l) { l.bthread_done(def.name); });
    } else {
      notify.each([&](RunnerListener& l) {
        l.assertion_failed(def.name, out.result.message());
      });
      result.failed_bthread = def.name;
      result.failure_message = out.result.message();
      return finish(EndReason::AssertionFailed);
    }
  }

  const bool at_limit_check = config.max_events.has_value();
  for (;;) {
    if (live.empty()) return finish(EndReason::Completed);

    const SyncSnapshot snapshot = snapshot_of(live);
    std::optional<Event> chosen;

    std::vector<Event> selectable = config.strategy->selectable(snapshot);
    if (!selectable.empty()) {
      if (at_limit_check && result.trace.size() >= *config.max_events) {
        return finish(EndReason::EventLimit);
      }
      chosen = config.strategy->choose(snapshot, selectable, rng);
      if (!chosen) {
        throw ConfigError("strategy '" + std::string(config.strategy->name()) +
                          "' chose nothing from a non-empty selectable list");
      }
    } else {
      // Super-step: internal events are exhausted; look to the environment.
      const auto blocked = [&](const Event& e) { return snapshot.blocked(e); };
      for (;;) {
        const std::uint64_t seen = external.version();
        if (auto ext = external.take_first_unblocked(blocked)) {
          if (at_limit_check && result.trace.size() >= *config.max_events) {
            return finish(EndReason::EventLimit);
          }
          chosen = std::move(ext);
          break;
        }
        if (!config.daemon) {
          if (snapshot.any_requests() &&
              simple_selectable(snapshot).empty()) {
            notify.each([&](RunnerListener& l) { l.deadlock(); });
            return finish(EndReason::Deadlock);
          }
          return finish(EndReason::Completed);
        }
        if (external.closed()) return finish(EndReason::Completed);
        notify.each([&](RunnerListener& l) {
          l.superstep_quiesced(external.pending());
        });
        external.wait_for_change(seen);
      }
    }

    const Event& event = *chosen;
    const std::size_t index = result.trace.size();
    result.trace.push_back(event);

    // Advance exactly the b-threads whose statement requested or waited for
    // the event; everyone else keeps state and statement. Affectedness is
    // decided against the statements as they were before any advancement.
    std::vector<LiveThread> next;
    next.reserve(live.size());
    std::vector<std::string> done_names;
    std::optional<std::pair<std::string, std::string>> violation;
    for (auto& t : live) {
      if (!statement_matches(t.stmt, event)) {
        next.push_back(std::move(t));
        continue;
      }
      StepOutcome out = advance_bthread(*t.def, t.state, Resume::on(event));
      if (out.result.is_sync()) {
        next.push_back({t.def, std::move(out.state), out.result.statement()});
      } else if (out.result.is_done()) {
        done_names.push_back(t.def->name);
      } else if (!violation) {
        violation = {t.def->name, out.result.message()};
      }
    }
    live = std::move(next);

    notify.each([&](RunnerListener& l) { l.event_selected(event, index); });
    for (const auto& name : done_names) {
      notify.each([&](RunnerListener& l) { l.bthread_done(name); });
    }
    if (violation) {
      notify.each([&](RunnerListener& l) {
        l.assertion_failed(violation->first, violation->second);
      });
      result.failed_bthread = violation->first;
      result.failure_message = violation->second;
      return finish(EndReason::AssertionFailed);
    }
  }
}

RunResult run(const BProgram& program, const RunnerConfig& config) {
  EventQueue empty;
  empty.close();
  return run(program, config, empty, {});
}

}  // namespace bp
