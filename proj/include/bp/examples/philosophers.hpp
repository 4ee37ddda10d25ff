#pragma once

#include "bp/core/bthread.hpp"

namespace bp::examples {

Event pick_event(int philosopher, char side);  // side: 'R' or 'L'
Event release_event(int philosopher, char side);

/// The dining philosophers model. Each of the `count` (>= 2) philosophers
/// repeatedly picks the chopstick to their right, then the left one, and
/// releases them in reverse order. Stick i sits between philosophers i and
/// i+1 (1-based, wrapping): it is picked by Pick{i}R or Pick{i+1}L, and while
/// held it blocks the other party's pick until the matching release.
/// The naive algorithm can reach a deadlock: all right sticks held.
BProgram build_philosophers(int count);

}  // namespace bp::examples
