#include "bp/runtime/queue.hpp"

#include "bp/core/errors.hpp"

namespace bp {

void EventQueue::enqueue(Event e) {
  {
    std::lock_guard lock(mutex_);
    if (closed_) {
      throw QueueClosedError("enqueue on closed external event queue");
    }
    events_.push_back(std::move(e));
    ++version_;
  }
  changed_.notify_all();
}

void EventQueue::close() {
  {
    std::lock_guard lock(mutex_);
    if (closed_) return;
    closed_ = true;
    ++version_;
  }
  changed_.notify_all();
}

bool EventQueue::closed() const {
  std::lock_guard lock(mutex_);
  return closed_;
}

std::size_t EventQueue::pending() const {
  std::lock_guard lock(mutex_);
  return events_.size();
}

std::uint64_t EventQueue::version() const {
  std::lock_guard lock(mutex_);
  return version_;
}

std::optional<Event> EventQueue::take_first_unblocked(
    const std::function<bool(const Event&)>& blocked) {
  std::lock_guard lock(mutex_);
  for (auto it = events_.begin(); it != events_.end(); ++it) {
    if (!blocked(*it)) {
      Event out = std::move(*it);
      events_.erase(it);
      return out;
    }
  }
  return std::nullopt;
}

void EventQueue::wait_for_change(std::uint64_t seen) const {
  std::unique_lock lock(mutex_);
  changed_.wait(lock, [&] { return version_ != seen; });
}

}  // namespace bp
