#pragma once

#include <string>
#include <vector>

#include "bp/core/bthread.hpp"

namespace bp {

/// What a scripted b-thread does after its last statement's resume.
struct ScriptEnd {
  enum class Kind { Loop, Finish, Fail };

  static ScriptEnd loop() { return {Kind::Loop, {}}; }
  static ScriptEnd finish() { return {Kind::Finish, {}}; }
  static ScriptEnd fail(std::string message) {
    return {Kind::Fail, std::move(message)};
  }

  Kind kind;
  std::string message;
};

/// Builds a b-thread that walks a fixed list of synchronization statements.
/// Most of the case-study b-threads are straight-line or cyclic scripts of
/// constant statements (request three HOTs; wait-then-block; the philosopher
/// pick/release cycle), and this keeps them declarative. The state value is
/// the statement index.
BThreadDef make_script_bthread(std::string name,
                               std::vector<SyncStatement> statements,
                               ScriptEnd end = ScriptEnd::loop(),
                               int priority = 0);

}  // namespace bp
