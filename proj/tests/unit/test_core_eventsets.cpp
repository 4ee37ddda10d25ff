#include <doctest.h>

#include "bp/core/event_set.hpp"
#include "bp/maze/maze.hpp"
#include "../support/generators.hpp"

using bp::Event;
using bp::EventSet;

TEST_CASE("membership basics per the algebra") {
  const Event hot("HOT");
  const Event cold("COLD");
  CHECK(EventSet::exact(hot).contains(hot));
  CHECK_FALSE(EventSet::exact(hot).contains(cold));

  CHECK(EventSet::name_prefix("Enter").contains(Event("Enter(2,3)")));
  CHECK_FALSE(EventSet::name_prefix("Enter").contains(Event("TARGET_FOUND")));

  const Event target("TARGET_FOUND");
  CHECK_FALSE(EventSet::all_except({target}).contains(target));
  CHECK(EventSet::all_except({target}).contains(hot));

  CHECK_FALSE(EventSet::none().contains(hot));
  CHECK_FALSE(EventSet::none().contains(target));
  CHECK(EventSet::all().contains(hot));

  CHECK(EventSet::name_is("HOT").contains(hot));
  CHECK_FALSE(EventSet::name_is("HOT").contains(Event("HOTTER")));
}

TEST_CASE("an explicit event list denotes any-of exact members") {
  const EventSet set{Event("A"), Event("B")};
  CHECK(set.contains(Event("A")));
  CHECK(set.contains(Event("B")));
  CHECK_FALSE(set.contains(Event("C")));
  CHECK(set.kind() == EventSet::Kind::AnyOf);
}

TEST_CASE("empty combinators collapse to the units") {
  bp::RandomSource rng(11);
  for (int i = 0; i < 200; ++i) {
    const Event e = bp::testing::random_event(rng);
    CHECK_FALSE(EventSet::any_of({}).contains(e));  // AnyOf([]) == None
    CHECK(EventSet::all_of({}).contains(e));        // AllOf([]) == All
  }
}

TEST_CASE("double negation is the identity under membership") {
  bp::RandomSource rng(12);
  for (int i = 0; i < 300; ++i) {
    const EventSet s = bp::testing::random_event_set(rng);
    const EventSet nn = EventSet::negation(EventSet::negation(s));
    const Event e = bp::testing::random_event(rng);
    CHECK(s.contains(e) == nn.contains(e));
  }
}

TEST_CASE("De Morgan: not(any_of(xs)) == all_of(map not xs)") {
  bp::RandomSource rng(13);
  for (int i = 0; i < 300; ++i) {
    std::vector<EventSet> members;
    const auto n = rng.next_below(4);
    for (std::uint64_t k = 0; k < n; ++k) {
      members.push_back(bp::testing::random_event_set(rng, 1));
    }
    std::vector<EventSet> negated;
    for (const auto& m : members) negated.push_back(EventSet::negation(m));

    const EventSet lhs = EventSet::negation(EventSet::any_of(members));
    const EventSet rhs = EventSet::all_of(negated);
    const Event e = bp::testing::random_event(rng);
    CHECK(lhs.contains(e) == rhs.contains(e));
  }
}

TEST_CASE("membership is pure: repeated calls agree") {
  bp::RandomSource rng(14);
  for (int i = 0; i < 100; ++i) {
    const EventSet s = bp::testing::random_event_set(rng);
    const Event e = bp::testing::random_event(rng);
    const bool first = s.contains(e);
    for (int k = 0; k < 3; ++k) CHECK(s.contains(e) == first);
  }
}

TEST_CASE("structural equality implies equal hashes") {
  bp::RandomSource a(15);
  bp::RandomSource b(15);
  for (int i = 0; i < 200; ++i) {
    const EventSet x = bp::testing::random_event_set(a);
    const EventSet y = bp::testing::random_event_set(b);
    CHECK(x == y);
    CHECK(x.hash() == y.hash());
  }
}

TEST_CASE("maze entrance set matches entries only") {
  CHECK(bp::maze::any_entrance().contains(bp::maze::enter_event(3, 2)));
  CHECK_FALSE(bp::maze::any_entrance().contains(Event("TARGET_FOUND")));
}
