// Command-line host for the b-program engine: run or verify the built-in
// examples and maze files, emit traces and verification reports, and play
// interactive tic-tac-toe against the strategy b-threads.

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "bp/core/errors.hpp"
#include "bp/core/json.hpp"
#include "bp/examples/registry.hpp"
#include "bp/examples/ttt.hpp"
#include "bp/maze/maze.hpp"
#include "bp/runtime/runner.hpp"
#include "bp/verifier/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDeadlock = 2;
constexpr int kExitAssertion = 3;
constexpr int kExitHotCycle = 4;
constexpr int kExitDepthBound = 5;
constexpr int kExitUsage = 64;
constexpr int kExitDataError = 65;
constexpr int kExitNoInput = 66;

class TracePrinter : public bp::RunnerListener {
 public:
  void event_selected(const bp::Event& e, std::size_t) override {
    std::cout << bp::encode_event(e) << '\n' << std::flush;
  }
};

/// In daemon mode the standard input is the environment: one canonical
/// event per line, enqueued as it arrives; EOF closes the queue.
void feed_stdin_events(bp::EventQueue& queue) {
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    try {
      queue.enqueue(bp::decode_event(line));
    } catch (const bp::Error& e) {
      std::cerr << "ignoring input line: " << e.what() << '\n';
    }
  }
  queue.close();
}

int cmd_run(const std::string& example, const std::string& strategy_name,
            std::uint64_t seed, std::optional<std::uint64_t> max_events,
            bool daemon) {
  std::shared_ptr<const bp::Strategy> strategy;
  if (!strategy_name.empty()) {
    strategy = bp::make_strategy(strategy_name);
    if (!strategy) {
      std::cerr << "unknown strategy '" << strategy_name << "'; one of:";
      for (const auto& n : bp::strategy_names()) std::cerr << ' ' << n;
      std::cerr << '\n';
      return kExitUsage;
    }
  }
  std::optional<bp::examples::ExampleInstance> instance;
  try {
    instance = bp::examples::make_example(example);
  } catch (const bp::MazeParseError& e) {
    std::cerr << "maze parse error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const bp::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitNoInput;
  }
  if (!instance) {
    std::cerr << "unknown example '" << example << "'; one of:";
    for (const auto& n : bp::examples::example_names()) std::cerr << ' ' << n;
    std::cerr << '\n';
    return kExitUsage;
  }

  bp::RunnerConfig config;
  config.strategy = strategy ? strategy : instance->default_strategy;
  config.seed = seed;
  config.max_events = max_events;
  config.daemon = daemon;

  bp::EventQueue queue;
  std::thread feeder;
  if (daemon) {
    feeder = std::thread(feed_stdin_events, std::ref(queue));
  } else {
    queue.close();
  }

  TracePrinter printer;
  bp::RunResult result =
      bp::run(instance->program, config, queue, {&printer});
  if (feeder.joinable()) {
    queue.close();
    feeder.join();
  }

  switch (result.termination) {
    case bp::EndReason::Completed:
    case bp::EndReason::EventLimit:
      return kExitOk;
    case bp::EndReason::Deadlock:
      std::cerr << "deadlock: all requested events are blocked\n";
      return kExitDeadlock;
    case bp::EndReason::AssertionFailed:
      std::cerr << "assertion failed in b-thread '" << result.failed_bthread
                << "': " << result.failure_message << '\n';
      return kExitAssertion;
  }
  return kExitOk;
}

const char* verdict_name(bp::VerificationResult::Verdict v) {
  using Verdict = bp::VerificationResult::Verdict;
  switch (v) {
    case Verdict::Ok:
      return "ok";
    case Verdict::AssertionViolation:
      return "assertion-violation";
    case Verdict::Deadlock:
      return "deadlock";
    case Verdict::HotCycle:
      return "hot-cycle";
    case Verdict::DepthBoundReached:
      return "depth-bound-reached";
  }
  return "ok";
}

int verdict_exit_code(bp::VerificationResult::Verdict v) {
  using Verdict = bp::VerificationResult::Verdict;
  switch (v) {
    case Verdict::Ok:
      return kExitOk;
    case Verdict::AssertionViolation:
      return kExitAssertion;
    case Verdict::Deadlock:
      return kExitDeadlock;
    case Verdict::HotCycle:
      return kExitHotCycle;
    case Verdict::DepthBoundReached:
      return kExitDepthBound;
  }
  return kExitOk;
}

void print_report(const bp::VerificationResult& result, std::int64_t millis) {
  std::cout << "verdict: " << verdict_name(result.verdict);
  if (result.verdict == bp::VerificationResult::Verdict::Ok &&
      result.store == bp::StoreKind::HashOnly) {
    std::cout << " (hash-only store: a hash collision could mask a violation)";
  }
  std::cout << '\n';
  if (result.verdict == bp::VerificationResult::Verdict::AssertionViolation) {
    std::cout << "failed b-thread: " << result.bthread << '\n'
              << "message: " << result.message << '\n';
  }
  std::cout << "states visited: " << result.states_visited << '\n'
            << "edges traversed: " << result.edges_traversed << '\n';
  if (!result.trace.empty() || !result.cycle.empty()) {
    std::cout << "trace (" << result.trace.size() << " events):\n";
    for (const auto& e : result.trace) {
      std::cout << "  " << bp::encode_event(e) << '\n';
    }
  }
  if (!result.cycle.empty()) {
    std::cout << "cycle (" << result.cycle.size() << " events):\n";
    for (const auto& e : result.cycle) {
      std::cout << "  " << bp::encode_event(e) << '\n';
    }
  }
  std::cout << "wall clock: " << millis << " ms\n";
}

void write_json_report(const std::string& path,
                       const bp::VerificationResult& result,
                       std::int64_t millis) {
  nlohmann::ordered_json report;
  report["verdict"] = verdict_name(result.verdict);
  report["statesVisited"] = result.states_visited;
  report["edgesTraversed"] = result.edges_traversed;
  report["trace"] = nlohmann::ordered_json::array();
  for (const auto& e : result.trace) {
    report["trace"].push_back(bp::event_to_json(e));
  }
  report["millis"] = millis;
  report["store"] =
      result.store == bp::StoreKind::Exact ? "exact" : "hash";
  if (result.verdict == bp::VerificationResult::Verdict::AssertionViolation) {
    report["bthread"] = result.bthread;
    report["message"] = result.message;
  }
  if (!result.cycle.empty()) {
    report["cycle"] = nlohmann::ordered_json::array();
    for (const auto& e : result.cycle) {
      report["cycle"].push_back(bp::event_to_json(e));
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write JSON report to " << path << '\n';
    return;
  }
  out << report.dump(2) << '\n';
}

int cmd_verify(const std::string& example, const std::string& maze_path,
               const std::string& store_name,
               std::optional<std::uint64_t> max_depth, bool hot_cycles,
               const std::string& json_path) {
  bp::VerificationSettings settings;
  settings.store =
      store_name == "hash" ? bp::StoreKind::HashOnly : bp::StoreKind::Exact;
  settings.max_depth = max_depth;
  settings.detect_hot_cycles = hot_cycles;

  const auto started = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - started)
        .count();
  };

  try {
    bp::VerificationResult result;
    std::optional<bp::maze::MazePath> path;
    bool maze_mode = !maze_path.empty();
    if (maze_mode) {
      std::ifstream in(maze_path, std::ios::binary);
      if (!in) {
        std::cerr << "cannot read maze file: " << maze_path << '\n';
        return kExitNoInput;
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      const bp::maze::MazeModel maze = bp::maze::parse_maze(buffer.str());

      // Solving is verifying: the requirement b-thread asserts the target is
      // never found, and a counterexample trace is the path.
      const bp::BProgram solver = bp::maze::build_maze_solver_program(maze);
      settings.detect_deadlocks = false;
      if (hot_cycles) {
        result = bp::detect_hot_cycles(solver, settings);
      } else {
        result = bp::verify(solver, settings);
        if (result.verdict ==
            bp::VerificationResult::Verdict::AssertionViolation) {
          path = bp::maze::path_from_trace(result.trace);
        }
      }
    } else {
      auto instance = bp::examples::make_example(example);
      if (!instance) {
        std::cerr << "unknown example '" << example << "'\n";
        return kExitUsage;
      }
      settings.strategy = instance->default_strategy;
      result = hot_cycles ? bp::detect_hot_cycles(instance->program, settings)
                          : bp::verify(instance->program, settings);
    }

    const std::int64_t millis = elapsed_ms();
    print_report(result, millis);
    if (maze_mode && !hot_cycles) {
      if (path) {
        std::cout << "path:";
        for (const auto& [col, row] : path->cells) {
          std::cout << " (" << col << ',' << row << ')';
        }
        std::cout << '\n';
      } else {
        std::cout << "no path exists\n";
      }
    }
    if (!json_path.empty()) write_json_report(json_path, result, millis);
    return verdict_exit_code(result.verdict);
  } catch (const bp::MazeParseError& e) {
    std::cerr << "maze parse error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const bp::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bp::Error& e) {
    std::cerr << e.what() << '\n';
    return kExitNoInput;
  }
}

// --- interactive tic-tac-toe -------------------------------------------

class PlaySession : public bp::RunnerListener {
 public:
  explicit PlaySession(bp::EventQueue& queue) : queue_(queue) {}

  void event_selected(const bp::Event& e, std::size_t) override {
    std::lock_guard lock(mutex_);
    if (submitted_ && e == *submitted_) submitted_.reset();
    if (bp::examples::any_mark().contains(e)) {
      board_.apply(e);
      const char who = e.name()[0];
      const auto& data = e.data()->as_map();
      std::cout << (who == 'X' ? "you" : "engine") << " played ("
                << data.at("col").as_int() << ',' << data.at("row").as_int()
                << ")\n"
                << board_.render() << std::flush;
    } else if (e == bp::examples::x_win_event()) {
      finish("X wins.");
    } else if (e == bp::examples::o_win_event()) {
      finish("O wins.");
    } else if (e == bp::examples::draw_event()) {
      finish("Draw.");
    }
  }

  void superstep_quiesced(std::size_t) override {
    std::lock_guard lock(mutex_);
    quiesced_ = true;
    changed_.notify_all();
  }

  void ended(bp::EndReason) override {
    std::lock_guard lock(mutex_);
    over_ = true;
    changed_.notify_all();
  }

  /// Waits for the engine to need input (or the session to end). Returns
  /// false when the game is over.
  bool await_turn() {
    std::unique_lock lock(mutex_);
    changed_.wait(lock, [&] { return quiesced_ || over_; });
    quiesced_ = false;
    return !over_ && !game_done_;
  }

  void wait_ended() {
    std::unique_lock lock(mutex_);
    changed_.wait(lock, [&] { return over_; });
  }

  bool move_rejected() {
    std::lock_guard lock(mutex_);
    return submitted_.has_value();
  }

  void submit(const bp::Event& e) {
    {
      std::lock_guard lock(mutex_);
      submitted_ = e;
    }
    queue_.enqueue(e);
  }

  bp::examples::TttBoard board() {
    std::lock_guard lock(mutex_);
    return board_;
  }

 private:
  void finish(const std::string& message) {
    std::cout << message << '\n' << std::flush;
    game_done_ = true;
    queue_.close();  // lets the parked daemon runner complete
  }

  bp::EventQueue& queue_;
  std::mutex mutex_;
  std::condition_variable changed_;
  bp::examples::TttBoard board_;
  std::optional<bp::Event> submitted_;
  bool quiesced_ = false;
  bool over_ = false;
  bool game_done_ = false;
};

int cmd_play_ttt(std::uint64_t seed) {
  bp::examples::TttOptions options{.include_strategy = true,
                                   .include_simulated_x = false,
                                   .include_spec = false};
  bp::BProgram program = bp::examples::build_ttt(options);

  bp::RunnerConfig config;
  config.strategy = bp::make_strategy("priority-sync");
  config.seed = seed;
  config.daemon = true;

  bp::EventQueue queue;
  PlaySession session(queue);
  std::thread runner([&] {
    bp::run(program, config, queue, {&session});
  });

  std::cout << "you are X; enter moves as: col row (0-based)\n"
            << session.board().render() << std::flush;

  while (session.await_turn()) {
    if (session.move_rejected()) {
      std::cout << "illegal move (square taken); try again\n" << std::flush;
    }
    for (;;) {
      std::cout << "your move (col row): " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) {
        queue.close();
        session.wait_ended();
        runner.join();
        return kExitOk;
      }
      std::istringstream parse(line);
      int col = -1;
      int row = -1;
      if (!(parse >> col >> row) || col < 0 || col > 2 || row < 0 || row > 2) {
        std::cout << "expected two numbers in 0..2\n";
        continue;
      }
      session.submit(bp::examples::mark_event('X', col, row));
      break;
    }
  }

  session.wait_ended();
  runner.join();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"behavioral-programming engine: run, verify, play"};
  app.require_subcommand(1);

  std::string example;
  std::string strategy;  // empty: the example's own default
  std::uint64_t seed = 0;
  std::uint64_t max_events_arg = 0;
  bool have_max_events = false;
  bool daemon = false;

  auto* run_cmd =
      app.add_subcommand("run", "execute an example, one event per line");
  run_cmd->add_option("--example", example, "example name")->required();
  run_cmd->add_option("--strategy", strategy,
                      "simple|priority-bthread|priority-sync|ordered");
  run_cmd->add_option("--seed", seed, "random seed");
  run_cmd->add_option("--max-events", max_events_arg, "stop after N events")
      ->check(CLI::PositiveNumber);
  run_cmd->add_flag("--daemon", daemon,
                    "park at quiescence; read external events from stdin");

  std::string maze_path;
  std::string store = "exact";
  std::uint64_t max_depth_arg = 0;
  bool hot_cycles = false;
  std::string json_path;

  auto* verify_cmd =
      app.add_subcommand("verify", "model-check an example or a maze file");
  verify_cmd->add_option("--example", example, "example name");
  verify_cmd->add_option("--maze", maze_path, "maze DSL file; solves it");
  verify_cmd->add_option("--store", store, "visited-state store")
      ->check(CLI::IsMember({"exact", "hash"}));
  verify_cmd->add_option("--max-depth", max_depth_arg,
                         "bound counterexample length")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--hot-cycles", hot_cycles,
                       "search for all-hot cycles instead of safety");
  verify_cmd->add_option("--json", json_path, "write a machine report here");

  auto* play_cmd =
      app.add_subcommand("play-ttt", "interactive tic-tac-toe (you are X)");
  play_cmd->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  have_max_events = run_cmd->count("--max-events") > 0;

  if (run_cmd->parsed()) {
    return cmd_run(example, strategy, seed,
                   have_max_events
                       ? std::optional<std::uint64_t>(max_events_arg)
                       : std::nullopt,
                   daemon);
  }
  if (verify_cmd->parsed()) {
    if (example.empty() == maze_path.empty()) {
      std::cerr << "verify needs exactly one of --example or --maze\n";
      return kExitUsage;
    }
    return cmd_verify(example, maze_path, store,
                      verify_cmd->count("--max-depth") > 0
                          ? std::optional<std::uint64_t>(max_depth_arg)
                          : std::nullopt,
                      hot_cycles, json_path);
  }
  if (play_cmd->parsed()) return cmd_play_ttt(seed);
  return kExitUsage;
}
