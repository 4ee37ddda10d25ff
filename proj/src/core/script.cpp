#include "bp/core/script.hpp"

#include <memory>
#include <utility>

namespace bp {

BThreadDef make_script_bthread(std::string name,
                               std::vector<SyncStatement> statements,
                               ScriptEnd end, int priority) {
  auto script = std::make_shared<const std::vector<SyncStatement>>(
      std::move(statements));
  auto step = [script, end](const Value& state,
                            const Resume& resume) -> StepOutcome {
    std::int64_t pc = resume.is_start() ? 0 : state.as_int() + 1;
    if (pc >= static_cast<std::int64_t>(script->size())) {
      switch (end.kind) {
        case ScriptEnd::Kind::Loop:
          pc = 0;
          break;
        case ScriptEnd::Kind::Finish:
          return {state, StepResult::done()};
        case ScriptEnd::Kind::Fail:
          return {state, StepResult::violation(end.message)};
      }
    }
    if (script->empty()) return {Value(std::int64_t{0}), StepResult::done()};
    return {Value(pc), StepResult::sync((*script)[pc])};
  };
  return BThreadDef{std::move(name), priority, Value(std::int64_t{0}),
                    std::move(step)};
}

}  // namespace bp
