#pragma once

#include <cstddef>
#include <string>

#include "bp/core/event.hpp"

namespace bp {

enum class EndReason { Completed, Deadlock, AssertionFailed, EventLimit };

/// Host-side callback protocol for monitoring a running b-program.
/// Callbacks are invoked synchronously, in loop order, on the runner's own
/// execution context; they must not re-enter the runner.
class RunnerListener {
 public:
  virtual ~RunnerListener() = default;

  virtual void started(const std::string& program_name) { (void)program_name; }

  /// An event was selected and dispatched; `index` is its trace position.
  virtual void event_selected(const Event& e, std::size_t index) {
    (void)e;
    (void)index;
  }

  virtual void bthread_done(const std::string& name) { (void)name; }

  virtual void assertion_failed(const std::string& bthread,
                                const std::string& message) {
    (void)bthread;
    (void)message;
  }

  virtual void deadlock() {}

  /// The internal run quiesced and no queued external event is currently
  /// dispatchable; in daemon mode the runner parks after this. Lets hosts
  /// detect that a submitted event is blocked (it stayed in the queue).
  virtual void superstep_quiesced(std::size_t pending_externals) {
    (void)pending_externals;
  }

  virtual void ended(EndReason reason) { (void)reason; }
};

}  // namespace bp
