#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bp/core/sync.hpp"
#include "bp/strategy/random.hpp"

namespace bp {

/// The state of a b-program at a synchronization point, as handed to an
/// event selection strategy: every live b-thread's name, registration-time
/// priority, and pending statement, in registration order.
struct SyncSnapshot {
  struct Entry {
    std::string bthread;
    int priority = 0;
    SyncStatement statement;
  };

  std::vector<Entry> entries;

  /// True iff any statement blocks `e`.
  bool blocked(const Event& e) const;

  /// True iff any statement requests anything at all.
  bool any_requests() const;
};

/// The baseline notion of selectability: the deduplicated union, in
/// statement-then-request order, of all requested events that no statement
/// blocks. Also the verifier's deadlock test, independent of the configured
/// strategy.
std::vector<Event> simple_selectable(const SyncSnapshot& snapshot);

/// An event selection strategy: one method computes the selectable events at
/// a synchronization point (used alone during verification), the other picks
/// one of them for the current run. Strategies are stateless apart from the
/// caller-supplied RandomSource.
///
/// Every strategy's selectable list must be a subset of simple_selectable's:
/// refining selection can only narrow the allowed event sequences, so a
/// program verified under the simple strategy stays valid under any of them.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::string_view name() const = 0;

  /// Ordered, deduplicated candidates. Deterministic for a given snapshot.
  virtual std::vector<Event> selectable(const SyncSnapshot& snapshot) const = 0;

  /// Picks an element of `selectable`, or nothing iff it is empty.
  /// Default: uniform choice.
  virtual std::optional<Event> choose(const SyncSnapshot& snapshot,
                                      const std::vector<Event>& selectable,
                                      RandomSource& rng) const;
};

/// Selects a random event that is requested and not blocked.
class SimpleStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "simple"; }
  std::vector<Event> selectable(const SyncSnapshot& snapshot) const override;
};

/// Selects a non-blocked event requested by a b-thread with the highest
/// priority among b-threads that have a selectable request.
class PrioritizedBThreadsStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "priority-bthread"; }
  std::vector<Event> selectable(const SyncSnapshot& snapshot) const override;
};

/// Statements may carry an integer priority hint (absent means 0); selects
/// among non-blocked requested events of the maximum-priority statements.
/// A non-integer hint is a configuration error naming the b-thread.
class PrioritizedSyncStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "priority-sync"; }
  std::vector<Event> selectable(const SyncSnapshot& snapshot) const override;
};

/// Treats each request list as ordered: per b-thread only the first
/// non-blocked requested event is a candidate.
class OrderedEventsStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "ordered"; }
  std::vector<Event> selectable(const SyncSnapshot& snapshot) const override;
};

/// Looks up a built-in strategy by its CLI name: "simple",
/// "priority-bthread", "priority-sync", "ordered". Returns nullptr if
/// unknown.
std::shared_ptr<const Strategy> make_strategy(std::string_view name);

/// The four built-in strategy names, in documentation order.
const std::vector<std::string>& strategy_names();

}  // namespace bp
