#pragma once

#include "bp/core/bthread.hpp"

namespace bp::examples {

const Event& hot_event();
const Event& cold_event();

/// The bath controller: add-hot and add-cold each request three parts of
/// water. With the balancer, control-temp forces strict alternation starting
/// cold by blocking each part of hot water until a part of cold water is
/// added; without it, any interleaving of the six requests can happen.
BProgram build_hotcold(bool with_balancer);

}  // namespace bp::examples
