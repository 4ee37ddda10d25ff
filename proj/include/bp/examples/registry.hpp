#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bp/core/bthread.hpp"
#include "bp/strategy/strategy.hpp"

namespace bp::examples {

/// A named, ready-to-run case study plus the event selection strategy it was
/// written against (tic-tac-toe's priorities mean nothing under any other).
struct ExampleInstance {
  BProgram program;
  std::shared_ptr<const Strategy> default_strategy;
};

/// Builds a registered example from its CLI name:
///   hotcold | hotcold:balanced | philosophers:<n> | ttt | ttt:undefended |
///   hotloop | maze:<path>
/// Returns nothing for an unknown name. Bad parameters (philosophers:1, an
/// unreadable or malformed maze file) surface as the corresponding errors.
std::optional<ExampleInstance> make_example(std::string_view name);

const std::vector<std::string>& example_names();

}  // namespace bp::examples
