#include "bp/core/event_set.hpp"

#include <algorithm>

#include "bp/core/hash.hpp"

namespace bp {

std::shared_ptr<const EventSet::Node> EventSet::make_node(
    Kind kind, std::vector<Event> events, std::string text,
    std::vector<EventSet> members) {
  CanonicalHasher h;
  h.tag('S');
  h.byte(static_cast<std::uint8_t>(kind));
  h.u64(events.size());
  for (const auto& e : events) h.u64(e.hash());
  h.text(text);
  h.u64(members.size());
  for (const auto& m : members) h.u64(m.hash());
  return std::make_shared<const Node>(Node{kind, std::move(events),
                                           std::move(text), std::move(members),
                                           h.digest()});
}

EventSet EventSet::none() {
  static const EventSet instance(make_node(Kind::None, {}, {}, {}));
  return instance;
}

EventSet EventSet::all() {
  static const EventSet instance(make_node(Kind::All, {}, {}, {}));
  return instance;
}

EventSet EventSet::exact(Event e) {
  return EventSet(make_node(Kind::Exact, {std::move(e)}, {}, {}));
}

EventSet EventSet::name_is(std::string name) {
  return EventSet(make_node(Kind::NameIs, {}, std::move(name), {}));
}

EventSet EventSet::name_prefix(std::string prefix) {
  return EventSet(make_node(Kind::NamePrefix, {}, std::move(prefix), {}));
}

EventSet EventSet::any_of(std::vector<EventSet> members) {
  return EventSet(make_node(Kind::AnyOf, {}, {}, std::move(members)));
}

EventSet EventSet::all_of(std::vector<EventSet> members) {
  return EventSet(make_node(Kind::AllOf, {}, {}, std::move(members)));
}

EventSet EventSet::negation(EventSet inner) {
  return EventSet(make_node(Kind::Not, {}, {}, {std::move(inner)}));
}

EventSet EventSet::all_except(std::vector<Event> excluded) {
  return EventSet(make_node(Kind::AllExcept, std::move(excluded), {}, {}));
}

EventSet EventSet::of_events(std::vector<Event> events) {
  std::vector<EventSet> members;
  members.reserve(events.size());
  for (auto& e : events) members.push_back(exact(std::move(e)));
  return any_of(std::move(members));
}

bool EventSet::contains(const Event& e) const {
  switch (node_->kind) {
    case Kind::None:
      return false;
    case Kind::All:
      return true;
    case Kind::Exact:
      return node_->events.front() == e;
    case Kind::NameIs:
      return e.name() == node_->text;
    case Kind::NamePrefix:
      return e.name().compare(0, node_->text.size(), node_->text) == 0;
    case Kind::AnyOf:
      return std::any_of(node_->members.begin(), node_->members.end(),
                         [&](const EventSet& s) { return s.contains(e); });
    case Kind::AllOf:
      return std::all_of(node_->members.begin(), node_->members.end(),
                         [&](const EventSet& s) { return s.contains(e); });
    case Kind::Not:
      return !node_->members.front().contains(e);
    case Kind::AllExcept:
      return std::none_of(node_->events.begin(), node_->events.end(),
                          [&](const Event& x) { return x == e; });
  }
  return false;
}

bool operator==(const EventSet& a, const EventSet& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  if (a.node_->kind != b.node_->kind) return false;
  return a.node_->events == b.node_->events &&
         a.node_->text == b.node_->text &&
         a.node_->members == b.node_->members;
}

}  // namespace bp
