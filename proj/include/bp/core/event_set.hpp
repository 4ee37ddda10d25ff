#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "bp/core/event.hpp"

namespace bp {

/// A closed algebraic predicate over events, used in waitFor/block statements
/// and by the verifier. Membership is a pure total function of the set and
/// the event. Sets are immutable and share structure, so copies are cheap.
///
/// An explicit list of events used where an EventSet is expected denotes
/// AnyOf of Exact members (see of_events and the initializer_list ctor).
class EventSet {
 public:
  enum class Kind {
    None,
    All,
    Exact,
    NameIs,
    NamePrefix,
    AnyOf,
    AllOf,
    Not,
    AllExcept,
  };

  /// Default-constructed sets match nothing.
  EventSet() : EventSet(none()) {}

  EventSet(std::initializer_list<Event> events)
      : EventSet(of_events(std::vector<Event>(events))) {}

  static EventSet none();
  static EventSet all();
  static EventSet exact(Event e);
  static EventSet name_is(std::string name);
  static EventSet name_prefix(std::string prefix);
  static EventSet any_of(std::vector<EventSet> members);
  static EventSet all_of(std::vector<EventSet> members);
  static EventSet negation(EventSet inner);
  static EventSet all_except(std::vector<Event> excluded);

  /// AnyOf of Exact members.
  static EventSet of_events(std::vector<Event> events);

  Kind kind() const { return node_->kind; }
  bool contains(const Event& e) const;

  /// Structural (not semantic) equality; enough for canonical program states
  /// because deterministic step functions rebuild identical structures.
  friend bool operator==(const EventSet& a, const EventSet& b);
  friend bool operator!=(const EventSet& a, const EventSet& b) {
    return !(a == b);
  }

  std::uint64_t hash() const { return node_->hash; }

 private:
  struct Node {
    Kind kind;
    std::vector<Event> events;      // Exact (single), AllExcept
    std::string text;               // NameIs, NamePrefix
    std::vector<EventSet> members;  // AnyOf, AllOf, Not (single)
    std::uint64_t hash = 0;         // computed once at construction
  };

  static std::shared_ptr<const Node> make_node(Kind kind,
                                               std::vector<Event> events,
                                               std::string text,
                                               std::vector<EventSet> members);

  explicit EventSet(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace bp
