#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bp/core/bthread.hpp"

namespace bp::examples {

/// Derived view of the tic-tac-toe position, used by the strategy move
/// generators, the CLI renderer, and the tests. The engine itself never
/// stores a board: b-threads own fragments of it.
class TttBoard {
 public:
  TttBoard() : cells_{"........."} {}

  static TttBoard from_string(const std::string& s);
  const std::string& to_string() const { return cells_; }

  char at(int col, int row) const { return cells_[row * 3 + col]; }
  void set(int col, int row, char mark) { cells_[row * 3 + col] = mark; }

  /// Applies an X(c,r)/O(c,r) placement event; other events are ignored.
  void apply(const Event& e);

  std::vector<std::pair<int, int>> empties() const;
  int count(char mark) const;
  bool full() const { return cells_.find('.') == std::string::npos; }
  char turn() const { return count('X') == count('O') ? 'X' : 'O'; }
  std::optional<char> winner() const;

  std::string render() const;

 private:
  std::string cells_;  // row-major, '.', 'X' or 'O'
};

/// The 8 board lines (rows, columns, diagonals) as (col,row) triples.
const std::vector<std::array<std::pair<int, int>, 3>>& ttt_lines();

Event mark_event(char player, int col, int row);  // X(c,r) / O(c,r)
const Event& x_win_event();
const Event& o_win_event();
const Event& draw_event();

EventSet any_mark();
EventSet any_mark_of(char player);
EventSet terminal_events();  // XWin, OWin, Draw

/// Empty squares where `player` completes a line immediately.
std::vector<std::pair<int, int>> winning_moves(const TttBoard& board,
                                               char player);
/// Empty squares where `player` creates two simultaneous winning threats.
std::vector<std::pair<int, int>> fork_moves(const TttBoard& board,
                                            char player);
/// O's fork tier: its own fork moves when it has any; otherwise, when X
/// threatens a fork, the safe defenses (occupy a lone fork square, or force
/// X elsewhere with a threat whose block square hands X neither a win nor a
/// fork).
std::vector<std::pair<int, int>> fork_tier_moves(const TttBoard& board);

struct TttOptions {
  bool include_strategy = true;     // the O player's prioritized move tiers
  bool include_simulated_x = false; // environment: X requests every square
  bool include_spec = false;        // requirement: "X should never win"
};

/// The tic-tac-toe b-program. Game-rule b-threads are always included: turn
/// alternation with X first, per-square single-mark blocking, one detector
/// per line announcing XWin/OWin, draw detection after nine marks, and a
/// blanket block on placements once any terminal event fires. A baseline
/// AnyO b-thread keeps O willing to play any empty square so the game is
/// playable with the strategy tiers removed (they outrank it when present).
BProgram build_ttt(const TttOptions& options = {});

}  // namespace bp::examples
