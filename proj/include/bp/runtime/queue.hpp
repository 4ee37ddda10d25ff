#pragma once

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <optional>

#include "bp/core/event.hpp"

namespace bp {

/// The external event queue: the FIFO channel by which a host application
/// injects environment events into a running b-program. The one concurrent
/// surface of the runtime — any number of producers, one consuming runner.
/// Ordering is globally FIFO by arrival.
class EventQueue {
 public:
  /// Appends an event. Callable from any thread while a run is in progress.
  /// Throws QueueClosedError once the queue is closed.
  void enqueue(Event e);

  /// No further enqueues; a parked daemon runner wakes up and completes.
  void close();

  bool closed() const;
  std::size_t pending() const;

  /// Bumped on every enqueue and on close; lets the runner park until
  /// something changed.
  std::uint64_t version() const;

  /// Removes and returns the first queued event for which `blocked` is
  /// false; blocked events keep their places in line.
  std::optional<Event> take_first_unblocked(
      const std::function<bool(const Event&)>& blocked);

  /// Blocks until version() differs from `seen`.
  void wait_for_change(std::uint64_t seen) const;

 private:
  mutable std::mutex mutex_;
  mutable std::condition_variable changed_;
  std::deque<Event> events_;
  bool closed_ = false;
  std::uint64_t version_ = 0;
};

}  // namespace bp
