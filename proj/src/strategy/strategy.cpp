#include "bp/strategy/strategy.hpp"

#include <algorithm>
#include <limits>

#include "bp/core/errors.hpp"

namespace bp {

bool SyncSnapshot::blocked(const Event& e) const {
  return std::any_of(entries.begin(), entries.end(), [&](const Entry& entry) {
    return entry.statement.block.contains(e);
  });
}

bool SyncSnapshot::any_requests() const {
  return std::any_of(entries.begin(), entries.end(), [](const Entry& entry) {
    return !entry.statement.request.empty();
  });
}

namespace {

void push_unique(std::vector<Event>& out, const Event& e) {
  if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
}

/// Reads a statement's integer priority hint; absent means 0.
std::int64_t sync_priority(const SyncSnapshot::Entry& entry) {
  if (!entry.statement.hint) return 0;
  if (entry.statement.hint->kind() != Value::Kind::Int) {
    throw ConfigError("b-thread '" + entry.bthread +
                      "': priority-sync hint must be an integer, got " +
                      entry.statement.hint->to_string());
  }
  return entry.statement.hint->as_int();
}

}  // namespace

std::vector<Event> simple_selectable(const SyncSnapshot& snapshot) {
  std::vector<Event> out;
  for (const auto& entry : snapshot.entries) {
    for (const auto& e : entry.statement.request) {
      if (!snapshot.blocked(e)) push_unique(out, e);
    }
  }
  return out;
}

std::optional<Event> Strategy::choose(const SyncSnapshot&,
                                      const std::vector<Event>& selectable,
                                      RandomSource& rng) const {
  if (selectable.empty()) return std::nullopt;
  return selectable[rng.next_below(selectable.size())];
}

std::vector<Event> SimpleStrategy::selectable(
    const SyncSnapshot& snapshot) const {
  return simple_selectable(snapshot);
}

std::vector<Event> PrioritizedBThreadsStrategy::selectable(
    const SyncSnapshot& snapshot) const {
  // A b-thread participates iff at least one of its requests is not blocked;
  // only events of the maximal-priority participants are selectable.
  bool any = false;
  int top = std::numeric_limits<int>::min();
  for (const auto& entry : snapshot.entries) {
    for (const auto& e : entry.statement.request) {
      if (!snapshot.blocked(e)) {
        any = true;
        top = std::max(top, entry.priority);
        break;
      }
    }
  }
  std::vector<Event> out;
  if (!any) return out;
  for (const auto& entry : snapshot.entries) {
    if (entry.priority != top) continue;
    for (const auto& e : entry.statement.request) {
      if (!snapshot.blocked(e)) push_unique(out, e);
    }
  }
  return out;
}

std::vector<Event> PrioritizedSyncStrategy::selectable(
    const SyncSnapshot& snapshot) const {
  bool any = false;
  std::int64_t top = std::numeric_limits<std::int64_t>::min();
  for (const auto& entry : snapshot.entries) {
    const std::int64_t p = sync_priority(entry);  // validates every hint
    for (const auto& e : entry.statement.request) {
      if (!snapshot.blocked(e)) {
        any = true;
        top = std::max(top, p);
        break;
      }
    }
  }
  std::vector<Event> out;
  if (!any) return out;
  for (const auto& entry : snapshot.entries) {
    if (sync_priority(entry) != top) continue;
    for (const auto& e : entry.statement.request) {
      if (!snapshot.blocked(e)) push_unique(out, e);
    }
  }
  return out;
}

std::vector<Event> OrderedEventsStrategy::selectable(
    const SyncSnapshot& snapshot) const {
  std::vector<Event> out;
  for (const auto& entry : snapshot.entries) {
    for (const auto& e : entry.statement.request) {
      if (!snapshot.blocked(e)) {
        push_unique(out, e);
        break;  // only the first non-blocked request per b-thread
      }
    }
  }
  return out;
}

std::shared_ptr<const Strategy> make_strategy(std::string_view name) {
  if (name == "simple") return std::make_shared<SimpleStrategy>();
  if (name == "priority-bthread") {
    return std::make_shared<PrioritizedBThreadsStrategy>();
  }
  if (name == "priority-sync") {
    return std::make_shared<PrioritizedSyncStrategy>();
  }
  if (name == "ordered") return std::make_shared<OrderedEventsStrategy>();
  return nullptr;
}

const std::vector<std::string>& strategy_names() {
  static const std::vector<std::string> names = {
      "simple", "priority-bthread", "priority-sync", "ordered"};
  return names;
}

}  // namespace bp
