#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bp/core/sync.hpp"
#include "bp/core/value.hpp"

namespace bp {

/// Result of advancing a b-thread one step: its next state value and what it
/// declared (a statement, completion, or a violation).
struct StepOutcome {
  Value state;
  StepResult result;
};

/// The step function must be deterministic and pure: identical
/// (state, resume) inputs yield identical outputs.
using StepFn = std::function<StepOutcome(const Value&, const Resume&)>;

/// A b-thread definition: a deterministic resumable computation over explicit
/// state values. State values support deep equality, canonical hashing, and
/// cloning, which is what lets the verifier scan, snapshot, and replay the
/// exact artifact that the runner executes.
struct BThreadDef {
  std::string name;
  int priority = 0;  // read only by the prioritized-b-threads strategy
  Value initial_state;
  StepFn step;
};

/// Advances a b-thread. The first activation uses the Start resume token.
/// A step function that throws is reported as an EngineError naming the
/// b-thread; it is never treated as a verification violation.
StepOutcome advance_bthread(const BThreadDef& def, const Value& state,
                            const Resume& resume);

/// A named set of b-threads with unique names; simultaneously a runnable
/// program and a checkable model.
class BProgram {
 public:
  explicit BProgram(std::string name) : name_(std::move(name)) {}

  /// Registers a b-thread. Throws ConfigError on a duplicate name.
  BProgram& add(BThreadDef def);

  const std::string& name() const { return name_; }
  const std::vector<BThreadDef>& bthreads() const { return bthreads_; }

 private:
  std::string name_;
  std::vector<BThreadDef> bthreads_;
};

}  // namespace bp
