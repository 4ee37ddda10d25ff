#include <doctest.h>

#include <map>
#include <thread>

#include "bp/core/errors.hpp"
#include "bp/core/script.hpp"
#include "bp/examples/hotcold.hpp"
#include "bp/examples/philosophers.hpp"
#include "bp/runtime/runner.hpp"
#include "bp/verifier/verifier.hpp"

using namespace bp;

namespace {

RunnerConfig simple_config(std::uint64_t seed = 0) {
  RunnerConfig config;
  config.strategy = make_strategy("simple");
  config.seed = seed;
  return config;
}

std::vector<std::string> names(const std::vector<Event>& trace) {
  std::vector<std::string> out;
  for (const auto& e : trace) out.push_back(e.name());
  return out;
}

/// Records every listener callback as a line, for ordering checks.
struct RecordingListener : RunnerListener {
  std::vector<std::string> log;

  void started(const std::string& program) override {
    log.push_back("started " + program);
  }
  void event_selected(const Event& e, std::size_t index) override {
    log.push_back("event " + std::to_string(index) + " " + e.name());
  }
  void bthread_done(const std::string& name) override {
    log.push_back("done " + name);
  }
  void assertion_failed(const std::string& bthread,
                        const std::string& message) override {
    log.push_back("assert " + bthread + ": " + message);
  }
  void deadlock() override { log.push_back("deadlock"); }
  void superstep_quiesced(std::size_t pending) override {
    log.push_back("quiesced " + std::to_string(pending));
  }
  void ended(EndReason) override { log.push_back("ended"); }
};

}  // namespace

TEST_CASE("balanced hot/cold forces strict alternation from cold") {
  const std::vector<std::string> expected = {"COLD", "HOT", "COLD",
                                             "HOT",  "COLD", "HOT"};
  for (std::uint64_t seed : {0, 1, 7, 42}) {
    RunResult result = run(examples::build_hotcold(true), simple_config(seed));
    CHECK(result.termination == EndReason::Completed);
    CHECK(names(result.trace) == expected);
  }
}

TEST_CASE("unbalanced hot/cold emits three of each in some order") {
  RunResult result = run(examples::build_hotcold(false), simple_config(3));
  CHECK(result.termination == EndReason::Completed);
  REQUIRE(result.trace.size() == 6);
  std::map<std::string, int> counts;
  for (const auto& e : result.trace) counts[e.name()]++;
  CHECK(counts["HOT"] == 3);
  CHECK(counts["COLD"] == 3);
}

TEST_CASE("dispatch advances requesters and waiters, no one else") {
  // add-hot must not move when COLD is selected; control-temp (a waiter)
  // must. Probe via the first two steps of the balanced program.
  BProgram program = examples::build_hotcold(true);
  RunResult result = run(program, simple_config(0));
  // If add-hot had advanced on COLD, fewer than three HOTs would remain and
  // the trace could not alternate to completion.
  CHECK(names(result.trace) ==
        std::vector<std::string>{"COLD", "HOT", "COLD", "HOT", "COLD", "HOT"});
}

TEST_CASE("an external event matching no statement is consumed silently") {
  BProgram program("lonely");
  program.add(make_script_bthread(
      "idler", {SyncStatement{.wait_for = EventSet::exact(Event("NEVER"))}}));
  EventQueue queue;
  queue.enqueue(Event("UNMATCHED"));
  queue.close();
  RunResult result = run(program, simple_config(), queue, {});
  CHECK(result.termination == EndReason::Completed);
  CHECK(names(result.trace) == std::vector<std::string>{"UNMATCHED"});
}

TEST_CASE("an event both requested and waited for advances the thread once") {
  const Event ping("PING");
  BProgram program("both");
  program.add(make_script_bthread(
      "both-sides",
      {SyncStatement{.request = {ping}, .wait_for = EventSet::exact(ping)},
       SyncStatement{.request = {Event("SECOND")}}},
      ScriptEnd::finish()));
  RunResult result = run(program, simple_config());
  CHECK(result.termination == EndReason::Completed);
  CHECK(names(result.trace) == std::vector<std::string>{"PING", "SECOND"});
}

TEST_CASE("super-step: externals wait for internal quiescence, FIFO among unblocked") {
  // Internal thread runs A,B,C; a blocker holds EBLK until E1 is seen.
  // Externals enqueued before the run: EBLK then E1. E1 must overtake the
  // blocked EBLK, which is deferred, not dropped.
  const Event a("A");
  const Event b("B");
  const Event c("C");
  const Event e1("E1");
  const Event eblk("EBLK");

  BProgram program("superstep");
  program.add(make_script_bthread("worker",
                                  {SyncStatement{.request = {a}},
                                   SyncStatement{.request = {b}},
                                   SyncStatement{.request = {c}},
                                   SyncStatement{.wait_for = EventSet{e1}},
                                   SyncStatement{.wait_for = EventSet{eblk}}},
                                  ScriptEnd::finish()));
  program.add(make_script_bthread(
      "blocker",
      {SyncStatement{.wait_for = EventSet{e1}, .block = EventSet{eblk}}},
      ScriptEnd::finish()));

  EventQueue queue;
  queue.enqueue(eblk);
  queue.enqueue(e1);
  queue.close();
  RunResult result = run(program, simple_config(), queue, {});
  CHECK(result.termination == EndReason::Completed);
  CHECK(names(result.trace) ==
        std::vector<std::string>{"A", "B", "C", "E1", "EBLK"});
}

TEST_CASE("enqueue after close is rejected") {
  EventQueue queue;
  queue.enqueue(Event("OK"));
  queue.close();
  CHECK_THROWS_AS(queue.enqueue(Event("LATE")), QueueClosedError);
}

TEST_CASE("daemon mode parks until events arrive and completes on close") {
  const Event poke("POKE");
  BProgram program("daemon");
  program.add(make_script_bthread(
      "responder", {SyncStatement{.wait_for = EventSet{poke}},
                    SyncStatement{.request = {Event("REPLY")}}},
      ScriptEnd::finish()));

  EventQueue queue;
  RunnerConfig config = simple_config();
  config.daemon = true;

  RecordingListener listener;
  std::thread host([&queue] {
    queue.enqueue(Event("POKE"));
    queue.close();
  });
  RunResult result = run(program, config, queue, {&listener});
  host.join();
  CHECK(result.termination == EndReason::Completed);
  CHECK(names(result.trace) == std::vector<std::string>{"POKE", "REPLY"});
}

TEST_CASE("max events bounds the trace and reports the limit") {
  RunnerConfig config = simple_config(7);
  config.max_events = 4;
  RunResult result = run(examples::build_philosophers(3), config);
  if (result.termination == EndReason::EventLimit) {
    CHECK(result.trace.size() == 4);
  } else {
    CHECK(result.termination == EndReason::Deadlock);
    CHECK(result.trace.size() <= 4);
  }
}

TEST_CASE("philosophers can reach runtime deadlock under some seed") {
  // The verifier guarantees a deadlock exists; some seed within a modest
  // scan must drive the simple strategy into it.
  bool found = false;
  for (std::uint64_t seed = 0; seed < 300 && !found; ++seed) {
    RunnerConfig config = simple_config(seed);
    config.max_events = 200;
    RunResult result = run(examples::build_philosophers(5), config);
    if (result.termination == EndReason::Deadlock) {
      found = true;
      // Every philosopher holds a right stick: the last five picks include
      // no releases after the final pick pattern; cheap sanity: trace ends
      // with all five right sticks held, so the five PickiR counts exceed
      // RchangeiR counts by one for each i... simply: deadlock implies the
      // final held set is all right sticks.
    }
  }
  CHECK(found);
}

TEST_CASE("per-philosopher program order holds in every trace") {
  RunnerConfig config = simple_config(11);
  config.max_events = 100;
  RunResult result = run(examples::build_philosophers(3), config);
  std::map<std::string, int> position;
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    position[result.trace[i].name()] = static_cast<int>(i);
    const std::string name = result.trace[i].name();
    if (name.rfind("Rel", 0) == 0 && name.back() == 'L') {
      const std::string pick = "Pick" + name.substr(3, name.size() - 4) + "L";
      CHECK(position.count(pick));  // RelL only after PickL
    }
  }
}

TEST_CASE("replay determinism: same config, same trace") {
  for (const auto& strategy_name : strategy_names()) {
    RunnerConfig config;
    config.strategy = make_strategy(strategy_name);
    config.seed = 99;
    config.max_events = 60;
    RunResult first = run(examples::build_philosophers(4), config);
    RunResult second = run(examples::build_philosophers(4), config);
    CHECK(first.termination == second.termination);
    CHECK(first.trace == second.trace);
  }
}

TEST_CASE("assertion failure ends the run right after the fatal event") {
  const Event bad("BAD");
  BProgram program("asserting");
  program.add(
      make_script_bthread("trigger", {SyncStatement{.request = {bad}}},
                          ScriptEnd::finish()));
  program.add(make_script_bthread("watcher",
                                  {SyncStatement{.wait_for = EventSet{bad}}},
                                  ScriptEnd::fail("saw BAD")));
  RecordingListener listener;
  EventQueue queue;
  queue.close();
  RunResult result = run(program, simple_config(), queue, {&listener});
  CHECK(result.termination == EndReason::AssertionFailed);
  CHECK(result.failed_bthread == "watcher");
  CHECK(result.failure_message == "saw BAD");
  CHECK(names(result.trace) == std::vector<std::string>{"BAD"});
  CHECK(listener.log == std::vector<std::string>{
                            "started asserting", "event 0 BAD",
                            "done trigger", "assert watcher: saw BAD",
                            "ended"});
}

TEST_CASE("listeners observe the loop in order") {
  RecordingListener listener;
  EventQueue queue;
  queue.close();
  RunResult result =
      run(examples::build_hotcold(true), simple_config(), queue, {&listener});
  REQUIRE(result.trace.size() == 6);
  REQUIRE(listener.log.size() >= 10);
  CHECK(listener.log.front() == "started hotcold:balanced");
  CHECK(listener.log[1] == "event 0 COLD");
  CHECK(listener.log.back() == "ended");
  // add-cold finishes exactly when the third COLD goes out.
  const auto done_cold = std::find(listener.log.begin(), listener.log.end(),
                                   "done add-cold");
  REQUIRE(done_cold != listener.log.end());
  CHECK(*(done_cold - 1) == "event 4 COLD");
}
