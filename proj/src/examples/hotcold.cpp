#include "bp/examples/hotcold.hpp"

#include "bp/core/script.hpp"

namespace bp::examples {

const Event& hot_event() {
  static const Event e("HOT");
  return e;
}

const Event& cold_event() {
  static const Event e("COLD");
  return e;
}

BProgram build_hotcold(bool with_balancer) {
  BProgram program(with_balancer ? "hotcold:balanced" : "hotcold");
  program.add(make_script_bthread("add-hot",
                                  {
                                      SyncStatement{.request = {hot_event()}},
                                      SyncStatement{.request = {hot_event()}},
                                      SyncStatement{.request = {hot_event()}},
                                  },
                                  ScriptEnd::finish()));
  program.add(make_script_bthread("add-cold",
                                  {
                                      SyncStatement{.request = {cold_event()}},
                                      SyncStatement{.request = {cold_event()}},
                                      SyncStatement{.request = {cold_event()}},
                                  },
                                  ScriptEnd::finish()));
  if (with_balancer) {
    program.add(make_script_bthread(
        "control-temp",
        {
            SyncStatement{.wait_for = EventSet::exact(cold_event()),
                          .block = EventSet::exact(hot_event())},
            SyncStatement{.wait_for = EventSet::exact(hot_event()),
                          .block = EventSet::exact(cold_event())},
        }));
  }
  return program;
}

}  // namespace bp::examples
