#include <doctest.h>

#include <map>
#include <set>

#include "bp/core/errors.hpp"
#include "bp/examples/hotcold.hpp"
#include "bp/examples/philosophers.hpp"
#include "bp/examples/registry.hpp"
#include "bp/examples/ttt.hpp"
#include "bp/runtime/runner.hpp"
#include "bp/verifier/verifier.hpp"
#include "../support/oracles.hpp"

using namespace bp;
using namespace bp::examples;
using Verdict = VerificationResult::Verdict;

namespace {

/// Scans a trace for stick mutual exclusion: between a pick of one side and
/// its matching release, the opposite-side pick of that stick never fires.
void check_stick_mutex(const std::vector<Event>& trace, int count) {
  std::map<int, char> held;  // stick -> 'R' or 'L' or absent
  for (const auto& e : trace) {
    const std::string& name = e.name();
    const bool pick = name.rfind("Pick", 0) == 0;
    const bool rel = name.rfind("Rel", 0) == 0;
    if (!pick && !rel) continue;
    const int phil = std::stoi(name.substr(pick ? 4 : 3,
                                           name.size() - (pick ? 5 : 4)));
    const char side = name.back();
    // Philosopher i's right stick is i; the left one is i-1 (wrapping).
    const int stick = side == 'R' ? phil : (phil == 1 ? count : phil - 1);
    if (pick) {
      CHECK_MESSAGE(held.find(stick) == held.end(), name);
      held[stick] = side;
    } else {
      CHECK_MESSAGE((held.count(stick) && held[stick] == side), name);
      held.erase(stick);
    }
  }
}

}  // namespace

TEST_CASE("philosophers builder validates its count") {
  CHECK_THROWS_AS(build_philosophers(1), ConfigError);
  CHECK_THROWS_AS(build_philosophers(0), ConfigError);
  CHECK_NOTHROW(build_philosophers(2));
}

TEST_CASE("philosophers roster follows the paper's construction loop") {
  BProgram program = build_philosophers(3);
  std::vector<std::string> expected = {"Stick1", "Phil1", "Stick2",
                                       "Phil2",  "Stick3", "Phil3"};
  std::vector<std::string> got;
  for (const auto& def : program.bthreads()) got.push_back(def.name);
  CHECK(got == expected);
}

TEST_CASE("stick mutual exclusion holds across runs and seeds") {
  for (std::uint64_t seed : {1, 5, 9, 12}) {
    RunnerConfig config;
    config.strategy = make_strategy("simple");
    config.seed = seed;
    config.max_events = 120;
    RunResult result = run(build_philosophers(4), config);
    check_stick_mutex(result.trace, 4);
  }
}

TEST_CASE("philosophers(2) state count equals the brute-force BFS oracle") {
  BProgram program = build_philosophers(2);
  VerificationSettings settings;
  settings.strategy = make_strategy("simple");
  VerificationResult result = verify(program, settings);
  auto oracle = bp::testing::bfs_enumerate(program, SimpleStrategy{});
  CHECK(result.states_visited == oracle.states);
}

TEST_CASE("ttt board basics") {
  TttBoard board;
  CHECK(board.turn() == 'X');
  board.apply(mark_event('X', 1, 1));
  CHECK(board.at(1, 1) == 'X');
  CHECK(board.turn() == 'O');
  board.apply(x_win_event());  // not a placement; ignored
  CHECK(board.to_string() == "....X....");

  TttBoard diag = TttBoard::from_string("X...X...X");
  CHECK(diag.winner() == 'X');
  CHECK_FALSE(TttBoard::from_string("XOXXOXO..").winner().has_value());
}

TEST_CASE("winning, fork, and defense move generators") {
  // O on a row of two: the third square completes it.
  TttBoard two_os = TttBoard::from_string("OO.......");
  auto wins = winning_moves(two_os, 'O');
  REQUIRE(wins.size() == 1);
  CHECK(wins[0] == std::pair<int, int>{2, 0});

  // The double-corner gambit: X owns two opposite corners, O the center.
  TttBoard gambit = TttBoard::from_string("X...O...X");
  CHECK(winning_moves(gambit, 'X').empty());
  CHECK(fork_moves(gambit, 'X').size() == 2);
  const auto defense = fork_tier_moves(gambit);
  REQUIRE_FALSE(defense.empty());
  // Every defense is an edge move that forces X away from the fork.
  for (const auto& [col, row] : defense) {
    CHECK(((col == 1) != (row == 1)));  // edges only
  }
}

TEST_CASE("win-completion outranks blocking the opponent (hints 50 vs 40)") {
  // O can complete col0; X threatens row2. PreventThirdX wants the same
  // defensive move, but AddThirdO's win must be the one selectable event.
  //   col,row: O(0,0) O(0,1) .  /  X(1,0) X... build explicitly:
  TttBoard board = TttBoard::from_string("OX."
                                         "OX."
                                         "...");
  REQUIRE(winning_moves(board, 'O') ==
          std::vector<std::pair<int, int>>{{0, 2}});
  REQUIRE(winning_moves(board, 'X') ==
          std::vector<std::pair<int, int>>{{1, 2}});

  PrioritizedSyncStrategy strategy;
  SyncSnapshot snap;
  snap.entries.push_back(
      {"AddThirdO",
       0,
       {.request = {mark_event('O', 0, 2)}, .hint = Value(50)}});
  snap.entries.push_back(
      {"PreventThirdX",
       0,
       {.request = {mark_event('O', 1, 2)}, .hint = Value(40)}});
  CHECK(strategy.selectable(snap) ==
        std::vector<Event>{mark_event('O', 0, 2)});
}

TEST_CASE("game rules: alternation, single marks, silence after a win") {
  RunnerConfig config;
  config.strategy = make_strategy("priority-sync");
  config.max_events = 60;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    config.seed = seed;
    RunResult result = run(build_ttt({.include_strategy = true,
                                      .include_simulated_x = true,
                                      .include_spec = false}),
                           config);
    std::set<std::string> squares;
    char expected_turn = 'X';
    bool over = false;
    for (const auto& e : result.trace) {
      if (any_mark().contains(e)) {
        CHECK_FALSE(over);
        CHECK(e.name()[0] == expected_turn);
        expected_turn = expected_turn == 'X' ? 'O' : 'X';
        const auto& d = e.data()->as_map();
        const std::string key = std::to_string(d.at("col").as_int()) + "," +
                                std::to_string(d.at("row").as_int());
        CHECK(squares.insert(key).second);  // marked only once
      } else if (terminal_events().contains(e)) {
        over = true;
      }
    }
    CHECK(over);
    CHECK(result.termination == EndReason::Completed);
  }
}

TEST_CASE("minimax oracle: X can win unguarded, cannot against perfect O") {
  std::set<std::string> seen;
  CHECK(bp::testing::ttt_x_win_reachable(TttBoard(), seen));

  std::map<std::string, bp::testing::TttOutcome> memo;
  CHECK(bp::testing::ttt_minimax(TttBoard(), memo) ==
        bp::testing::TttOutcome::Draw);
}

TEST_CASE("undefended ttt verification finds the X win") {
  BProgram program = build_ttt({.include_strategy = false,
                                .include_simulated_x = true,
                                .include_spec = true});
  VerificationSettings settings;
  settings.strategy = make_strategy("priority-sync");
  VerificationResult result = verify(program, settings);
  REQUIRE(result.verdict == Verdict::AssertionViolation);
  CHECK(result.bthread == "R1:XShouldNotWin");
  CHECK(result.message == "X won.");
  CHECK(result.trace.back() == x_win_event());
}

TEST_CASE("registry: names resolve, parameters validate") {
  CHECK(make_example("hotcold").has_value());
  CHECK(make_example("hotcold:balanced").has_value());
  CHECK(make_example("philosophers:4").has_value());
  CHECK(make_example("ttt").has_value());
  CHECK(make_example("hotloop").has_value());
  CHECK_FALSE(make_example("philosophers:x").has_value());
  CHECK_FALSE(make_example("nosuch").has_value());
  CHECK_THROWS_AS(make_example("philosophers:1"), ConfigError);
  CHECK(make_example("ttt")->default_strategy->name() == "priority-sync");
}
