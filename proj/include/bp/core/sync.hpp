#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bp/core/event.hpp"
#include "bp/core/event_set.hpp"
#include "bp/core/value.hpp"

namespace bp {

/// One b-thread's declaration at a synchronization point.
///
/// `request` preserves the order the b-thread gave it: the ordered-events
/// strategy depends on it, other strategies treat it as a set. `hint` is
/// opaque to the engine; only strategies interpret it (e.g. the
/// prioritized-synchronizations strategy reads an integer priority).
struct SyncStatement {
  std::vector<Event> request;
  EventSet wait_for = EventSet::none();
  EventSet block = EventSet::none();
  bool hot = false;
  std::optional<Value> hint;

  bool requests(const Event& e) const {
    for (const auto& r : request) {
      if (r == e) return true;
    }
    return false;
  }

  friend bool operator==(const SyncStatement& a, const SyncStatement& b) {
    return a.request == b.request && a.wait_for == b.wait_for &&
           a.block == b.block && a.hot == b.hot && a.hint == b.hint;
  }
  friend bool operator!=(const SyncStatement& a, const SyncStatement& b) {
    return !(a == b);
  }

  std::uint64_t hash() const;
};

/// Whether a selected event advances a b-thread paused on `stmt`: it does iff
/// the statement requested the event or waits for it.
inline bool statement_matches(const SyncStatement& stmt, const Event& e) {
  return stmt.requests(e) || stmt.wait_for.contains(e);
}

/// What a b-thread step produced: its next synchronization statement,
/// completion, or an assertion violation carrying a human-readable message.
class StepResult {
 public:
  static StepResult sync(SyncStatement stmt) {
    return StepResult(Repr(std::move(stmt)));
  }
  static StepResult done() { return StepResult(Repr(DoneTag{})); }
  static StepResult violation(std::string message) {
    return StepResult(Repr(Violation{std::move(message)}));
  }

  bool is_sync() const { return std::holds_alternative<SyncStatement>(repr_); }
  bool is_done() const { return std::holds_alternative<DoneTag>(repr_); }
  bool is_violation() const { return std::holds_alternative<Violation>(repr_); }

  const SyncStatement& statement() const {
    return std::get<SyncStatement>(repr_);
  }
  const std::string& message() const {
    return std::get<Violation>(repr_).message;
  }

 private:
  struct DoneTag {};
  struct Violation {
    std::string message;
  };
  using Repr = std::variant<SyncStatement, DoneTag, Violation>;

  explicit StepResult(Repr repr) : repr_(std::move(repr)) {}

  Repr repr_;
};

/// The token a b-thread is resumed with: the distinguished Start token on
/// first activation, a selected event afterwards.
class Resume {
 public:
  static Resume start() { return Resume(std::nullopt); }
  static Resume on(Event e) { return Resume(std::move(e)); }

  bool is_start() const { return !event_.has_value(); }
  const Event& event() const { return *event_; }

 private:
  explicit Resume(std::optional<Event> e) : event_(std::move(e)) {}
  std::optional<Event> event_;
};

}  // namespace bp
