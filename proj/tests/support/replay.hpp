#pragma once

// Forced-choice replay: a strategy whose selectable set is the baseline
// requested-and-not-blocked rule and whose choice follows a fixed script.
// Feeding a counterexample trace through the ordinary runner with this
// strategy must reproduce the reported verdict.

#include <memory>
#include <stdexcept>
#include <vector>

#include "bp/runtime/runner.hpp"
#include "bp/strategy/strategy.hpp"

namespace bp::testing {

class ScriptedStrategy final : public bp::Strategy {
 public:
  explicit ScriptedStrategy(std::vector<bp::Event> script)
      : script_(std::move(script)) {}

  std::string_view name() const override { return "scripted"; }

  std::vector<bp::Event> selectable(
      const bp::SyncSnapshot& snapshot) const override {
    return bp::simple_selectable(snapshot);
  }

  std::optional<bp::Event> choose(const bp::SyncSnapshot&,
                                  const std::vector<bp::Event>& selectable,
                                  bp::RandomSource&) const override {
    if (selectable.empty()) return std::nullopt;
    if (at_ >= script_.size()) {
      throw std::runtime_error("replay script exhausted with events pending");
    }
    const bp::Event& next = script_[at_];
    for (const auto& e : selectable) {
      if (e == next) {
        ++at_;
        return next;
      }
    }
    throw std::runtime_error("replay: scripted event not selectable: " +
                             next.name());
  }

  std::size_t consumed() const { return at_; }

 private:
  std::vector<bp::Event> script_;
  mutable std::size_t at_ = 0;
};

/// Replays a trace through the runner with forced choices and returns the
/// run result. The extra event of headroom lets a post-trace deadlock or
/// completion surface instead of tripping the event limit.
inline bp::RunResult replay_trace(const bp::BProgram& program,
                                  const std::vector<bp::Event>& trace) {
  bp::RunnerConfig config;
  config.strategy = std::make_shared<ScriptedStrategy>(trace);
  config.max_events = trace.size() + 1;
  return bp::run(program, config);
}

}  // namespace bp::testing
