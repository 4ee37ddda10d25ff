#include "bp/examples/ttt.hpp"

#include <array>
#include <stdexcept>

#include "bp/core/script.hpp"

namespace bp::examples {

TttBoard TttBoard::from_string(const std::string& s) {
  if (s.size() != 9 || s.find_first_not_of(".XO") != std::string::npos) {
    throw std::invalid_argument("TttBoard: want 9 chars of '.XO'");
  }
  TttBoard b;
  b.cells_ = s;
  return b;
}

void TttBoard::apply(const Event& e) {
  const char p = e.name().empty() ? '\0' : e.name()[0];
  if ((p != 'X' && p != 'O') || !e.data()) return;
  if (e.name().size() < 2 || e.name()[1] != '(') return;
  const auto& data = e.data()->as_map();
  set(static_cast<int>(data.at("col").as_int()),
      static_cast<int>(data.at("row").as_int()), p);
}

std::vector<std::pair<int, int>> TttBoard::empties() const {
  std::vector<std::pair<int, int>> out;
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) {
      if (at(col, row) == '.') out.push_back({col, row});
    }
  }
  return out;
}

int TttBoard::count(char mark) const {
  int n = 0;
  for (char c : cells_) n += (c == mark);
  return n;
}

std::optional<char> TttBoard::winner() const {
  for (const auto& line : ttt_lines()) {
    const char a = at(line[0].first, line[0].second);
    if (a == '.') continue;
    if (a == at(line[1].first, line[1].second) &&
        a == at(line[2].first, line[2].second)) {
      return a;
    }
  }
  return std::nullopt;
}

std::string TttBoard::render() const {
  std::string out = "   0 1 2\n";
  for (int row = 0; row < 3; ++row) {
    out += " " + std::to_string(row);
    for (int col = 0; col < 3; ++col) {
      out += ' ';
      out += at(col, row);
    }
    out += '\n';
  }
  return out;
}

const std::vector<std::array<std::pair<int, int>, 3>>& ttt_lines() {
  static const std::vector<std::array<std::pair<int, int>, 3>> lines = {
      {{{0, 0}, {1, 0}, {2, 0}}},  // rows
      {{{0, 1}, {1, 1}, {2, 1}}},
      {{{0, 2}, {1, 2}, {2, 2}}},
      {{{0, 0}, {0, 1}, {0, 2}}},  // columns
      {{{1, 0}, {1, 1}, {1, 2}}},
      {{{2, 0}, {2, 1}, {2, 2}}},
      {{{0, 0}, {1, 1}, {2, 2}}},  // diagonals
      {{{2, 0}, {1, 1}, {0, 2}}},
  };
  return lines;
}

Event mark_event(char player, int col, int row) {
  Value::Map data;
  data.emplace("col", Value(static_cast<std::int64_t>(col)));
  data.emplace("row", Value(static_cast<std::int64_t>(row)));
  return Event(std::string(1, player) + "(" + std::to_string(col) + "," +
                   std::to_string(row) + ")",
               Value(std::move(data)));
}

const Event& x_win_event() {
  static const Event e("XWin");
  return e;
}

const Event& o_win_event() {
  static const Event e("OWin");
  return e;
}

const Event& draw_event() {
  static const Event e("Draw");
  return e;
}

EventSet any_mark_of(char player) {
  return EventSet::name_prefix(std::string(1, player) + "(");
}

EventSet any_mark() {
  return EventSet::any_of({any_mark_of('X'), any_mark_of('O')});
}

EventSet terminal_events() {
  return EventSet{x_win_event(), o_win_event(), draw_event()};
}

std::vector<std::pair<int, int>> winning_moves(const TttBoard& board,
                                               char player) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [col, row] : board.empties()) {
    TttBoard next = board;
    next.set(col, row, player);
    if (next.winner() == player) out.push_back({col, row});
  }
  return out;
}

std::vector<std::pair<int, int>> fork_moves(const TttBoard& board,
                                            char player) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [col, row] : board.empties()) {
    TttBoard next = board;
    next.set(col, row, player);
    if (winning_moves(next, player).size() >= 2) out.push_back({col, row});
  }
  return out;
}

std::vector<std::pair<int, int>> fork_tier_moves(const TttBoard& board) {
  auto own = fork_moves(board, 'O');
  if (!own.empty()) return own;

  const auto danger = fork_moves(board, 'X');
  if (danger.empty()) return {};
  if (danger.size() == 1) return danger;

  // Multiple fork squares: taking one leaves the other. Force X away with a
  // threat, as long as X's forced block is neither a win nor a fork for X.
  std::vector<std::pair<int, int>> out;
  for (const auto& [col, row] : board.empties()) {
    TttBoard after = board;
    after.set(col, row, 'O');
    const auto threats = winning_moves(after, 'O');
    if (threats.size() != 1) continue;  // >=2 would have been an own fork
    const auto [bc, br] = threats.front();
    TttBoard blocked = after;
    blocked.set(bc, br, 'X');
    if (blocked.winner() == 'X') continue;
    if (winning_moves(blocked, 'X').size() >= 2) continue;  // X forked anyway
    out.push_back({col, row});
  }
  if (out.empty()) return danger;  // last resort: occupy a fork square
  return out;
}

namespace {

std::vector<std::pair<int, int>> center_moves(const TttBoard& board) {
  if (board.at(1, 1) == '.') return {{1, 1}};
  return {};
}

std::vector<std::pair<int, int>> corner_moves(const TttBoard& board) {
  std::vector<std::pair<int, int>> out;
  for (auto [col, row] : {std::pair<int, int>{0, 0}, {2, 0}, {0, 2}, {2, 2}}) {
    if (board.at(col, row) == '.') out.push_back({col, row});
  }
  return out;
}

std::vector<std::pair<int, int>> edge_moves(const TttBoard& board) {
  std::vector<std::pair<int, int>> out;
  for (auto [col, row] : {std::pair<int, int>{1, 0}, {0, 1}, {2, 1}, {1, 2}}) {
    if (board.at(col, row) == '.') out.push_back({col, row});
  }
  return out;
}

EventSet mark_or_terminal() {
  return EventSet::any_of({any_mark(), terminal_events()});
}

bool is_terminal(const Event& e) { return terminal_events().contains(e); }

using MoveFn = std::vector<std::pair<int, int>> (*)(const TttBoard&);

/// A board-tracking O adviser: keeps the position in its state value and, at
/// every synchronization point, requests its tier's moves for O. Requests may
/// be blocked (off turn, taken square) — the game rules filter them. Retires
/// when the game ends.
BThreadDef make_adviser(std::string name, std::optional<std::int64_t> hint,
                        MoveFn moves) {
  auto step = [moves, hint](const Value& state,
                            const Resume& resume) -> StepOutcome {
    TttBoard board = resume.is_start() ? TttBoard()
                                       : TttBoard::from_string(state.as_text());
    if (!resume.is_start()) {
      if (is_terminal(resume.event())) return {state, StepResult::done()};
      board.apply(resume.event());
    }
    SyncStatement stmt{.wait_for = mark_or_terminal()};
    for (const auto& [col, row] : moves(board)) {
      stmt.request.push_back(mark_event('O', col, row));
    }
    if (hint) stmt.hint = Value(*hint);
    return {Value(board.to_string()), StepResult::sync(std::move(stmt))};
  };
  return BThreadDef{std::move(name), 0, Value(TttBoard().to_string()),
                    std::move(step)};
}

/// Watches one line and announces a completed triplet, blocking everything
/// else until the announcement goes out. A mixed line can never complete, so
/// the detector retires.
BThreadDef make_line_detector(std::string name, int line_index) {
  auto step = [line_index](const Value& state,
                           const Resume& resume) -> StepOutcome {
    const auto& line = ttt_lines()[line_index];
    auto line_marks = [&](void) {
      std::vector<Event> events;
      for (char player : {'X', 'O'}) {
        for (const auto& [col, row] : line) {
          events.push_back(mark_event(player, col, row));
        }
      }
      return EventSet::of_events(std::move(events));
    };

    std::int64_t x = 0;
    std::int64_t o = 0;
    bool announcing = false;
    if (!resume.is_start()) {
      const auto& counts = state.as_map();
      x = counts.at("x").as_int();
      o = counts.at("o").as_int();
      announcing = counts.at("announcing").as_bool();
      if (announcing) return {state, StepResult::done()};  // win announced
      (resume.event().name()[0] == 'X' ? x : o) += 1;
      if (x > 0 && o > 0) return {state, StepResult::done()};  // dead line
    }
    Value::Map next{{"x", Value(x)}, {"o", Value(o)},
                    {"announcing", Value(x == 3 || o == 3)}};
    if (x == 3 || o == 3) {
      const Event& win = (x == 3) ? x_win_event() : o_win_event();
      SyncStatement stmt{.request = {win},
                         .block = EventSet::all_except({win})};
      return {Value(std::move(next)), StepResult::sync(std::move(stmt))};
    }
    SyncStatement stmt{.wait_for = line_marks()};
    return {Value(std::move(next)), StepResult::sync(std::move(stmt))};
  };
  Value::Map initial{{"x", Value(std::int64_t{0})},
                     {"o", Value(std::int64_t{0})},
                     {"announcing", Value(false)}};
  return BThreadDef{std::move(name), 0, Value(std::move(initial)),
                    std::move(step)};
}

/// After the ninth mark, requests Draw unless a win announcement beats it.
BThreadDef make_draw_detector() {
  auto step = [](const Value& state, const Resume& resume) -> StepOutcome {
    std::int64_t marks = resume.is_start() ? 0 : state.as_int();
    if (!resume.is_start()) {
      if (is_terminal(resume.event())) return {state, StepResult::done()};
      marks += 1;
    }
    if (marks == 9) {
      SyncStatement stmt{.request = {draw_event()},
                         .wait_for = EventSet{x_win_event(), o_win_event()}};
      return {Value(marks), StepResult::sync(std::move(stmt))};
    }
    SyncStatement stmt{.wait_for = mark_or_terminal()};
    return {Value(marks), StepResult::sync(std::move(stmt))};
  };
  return BThreadDef{"Draw", 0, Value(std::int64_t{0}), std::move(step)};
}

/// Listing-9-style environment: constantly requests placing Xs in all
/// squares; the game rules block the illegal ones. Retires at game end.
BThreadDef make_simulated_opponent() {
  auto step = [](const Value& state, const Resume& resume) -> StepOutcome {
    if (!resume.is_start() && is_terminal(resume.event())) {
      return {state, StepResult::done()};
    }
    SyncStatement stmt{.wait_for = terminal_events(),
                       .hint = Value(std::int64_t{10})};
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) {
        stmt.request.push_back(mark_event('X', col, row));
      }
    }
    return {state, StepResult::sync(std::move(stmt))};
  };
  return BThreadDef{"SimulatedOpponent", 0, Value(std::int64_t{0}),
                    std::move(step)};
}

std::vector<std::pair<int, int>> all_empties(const TttBoard& board) {
  return board.empties();
}

}  // namespace

BProgram build_ttt(const TttOptions& options) {
  BProgram program("ttt");

  // Players take turns, X first.
  program.add(make_script_bthread(
      "Turns", {
                   SyncStatement{.wait_for = any_mark_of('X'),
                                 .block = any_mark_of('O')},
                   SyncStatement{.wait_for = any_mark_of('O'),
                                 .block = any_mark_of('X')},
               }));

  // A square can be marked only once.
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) {
      const Event x = mark_event('X', col, row);
      const Event o = mark_event('O', col, row);
      program.add(make_script_bthread(
          "square(" + std::to_string(col) + "," + std::to_string(row) + ")",
          {
              SyncStatement{.wait_for = EventSet{x, o}},
              SyncStatement{.block = EventSet{x, o}},  // parked forever
          }));
    }
  }

  static const char* kLineNames[8] = {"row0", "row1", "row2", "col0",
                                      "col1", "col2", "diag", "anti-diag"};
  for (int i = 0; i < 8; ++i) {
    program.add(make_line_detector("line(" + std::string(kLineNames[i]) + ")",
                                   i));
  }

  program.add(make_draw_detector());

  // Once any terminal event fires, no further placements.
  program.add(make_script_bthread(
      "GameOver", {
                      SyncStatement{.wait_for = terminal_events()},
                      SyncStatement{.block = any_mark()},  // parked forever
                  }));

  if (options.include_strategy) {
    program.add(make_adviser("AddThirdO", 50,
                             [](const TttBoard& b) {
                               return winning_moves(b, 'O');
                             }));
    program.add(make_adviser("PreventThirdX", 40,
                             [](const TttBoard& b) {
                               return winning_moves(b, 'X');
                             }));
    program.add(make_adviser("Fork", 35, fork_tier_moves));
    program.add(make_adviser("Center", 30, center_moves));
    program.add(make_adviser("Corner", 20, corner_moves));
    program.add(make_adviser("Edge", 10, edge_moves));
  }

  // Baseline willingness to play anywhere; outranked by every strategy tier.
  program.add(make_adviser("AnyO", std::nullopt, all_empties));

  if (options.include_simulated_x) program.add(make_simulated_opponent());

  if (options.include_spec) {
    program.add(make_script_bthread(
        "R1:XShouldNotWin",
        {SyncStatement{.wait_for = EventSet::exact(x_win_event())}},
        ScriptEnd::fail("X won.")));
  }
  return program;
}

}  // namespace bp::examples
