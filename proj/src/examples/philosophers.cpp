#include "bp/examples/philosophers.hpp"

#include <string>

#include "bp/core/errors.hpp"
#include "bp/core/script.hpp"

namespace bp::examples {

Event pick_event(int philosopher, char side) {
  return Event("Pick" + std::to_string(philosopher) + side);
}

Event release_event(int philosopher, char side) {
  return Event("Rel" + std::to_string(philosopher) + side);
}

namespace {

BThreadDef make_philosopher(int i) {
  return make_script_bthread("Phil" + std::to_string(i),
                             {
                                 SyncStatement{.request = {pick_event(i, 'R')}},
                                 SyncStatement{.request = {pick_event(i, 'L')}},
                                 SyncStatement{.request = {release_event(i, 'L')}},
                                 SyncStatement{.request = {release_event(i, 'R')}},
                             });
}

/// Stick i alternates between free (waiting for either pick) and held (block
/// the other party's pick until the matching release).
BThreadDef make_stick(int i, int count) {
  const int right_phil = i;                      // picks via Pick{i}R
  const int left_phil = (i % count) + 1;         // picks via Pick{i+1}L
  const Event picked_r = pick_event(right_phil, 'R');
  const Event picked_l = pick_event(left_phil, 'L');
  const Event released_r = release_event(right_phil, 'R');
  const Event released_l = release_event(left_phil, 'L');

  // States: 0 free, 1 held by the right-hand philosopher, 2 held by the left.
  auto step = [=](const Value& state, const Resume& resume) -> StepOutcome {
    const std::int64_t at = resume.is_start() ? 0 : state.as_int();
    auto statement_for = [&](std::int64_t s) -> SyncStatement {
      switch (s) {
        case 1:
          return SyncStatement{.wait_for = EventSet::exact(released_r),
                               .block = EventSet::exact(picked_l)};
        case 2:
          return SyncStatement{.wait_for = EventSet::exact(released_l),
                               .block = EventSet::exact(picked_r)};
        default:
          return SyncStatement{.wait_for = EventSet{picked_r, picked_l}};
      }
    };
    if (resume.is_start()) {
      return {Value(std::int64_t{0}), StepResult::sync(statement_for(0))};
    }
    std::int64_t next = 0;
    if (at == 0) {
      next = (resume.event() == picked_r) ? 1 : 2;
    } else {
      next = 0;  // matching release observed
    }
    return {Value(next), StepResult::sync(statement_for(next))};
  };
  return BThreadDef{"Stick" + std::to_string(i), 0, Value(std::int64_t{0}),
                    std::move(step)};
}

}  // namespace

BProgram build_philosophers(int count) {
  if (count < 2) {
    throw ConfigError("philosophers: need at least 2, got " +
                      std::to_string(count));
  }
  BProgram program("philosophers:" + std::to_string(count));
  for (int i = 1; i <= count; ++i) {
    program.add(make_stick(i, count));
    program.add(make_philosopher(i));
  }
  return program;
}

}  // namespace bp::examples
