#include "bp/core/bthread.hpp"

#include <exception>

#include "bp/core/errors.hpp"

namespace bp {

StepOutcome advance_bthread(const BThreadDef& def, const Value& state,
                            const Resume& resume) {
  try {
    return def.step(state, resume);
  } catch (const std::exception& e) {
    throw EngineError("b-thread '" + def.name + "' failed: " + e.what());
  } catch (...) {
    throw EngineError("b-thread '" + def.name + "' failed");
  }
}

BProgram& BProgram::add(BThreadDef def) {
  for (const auto& existing : bthreads_) {
    if (existing.name == def.name) {
      throw ConfigError("duplicate b-thread name '" + def.name + "' in '" +
                        name_ + "'");
    }
  }
  bthreads_.push_back(std::move(def));
  return *this;
}

}  // namespace bp
