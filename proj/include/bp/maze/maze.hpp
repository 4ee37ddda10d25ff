#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bp/core/bthread.hpp"
#include "bp/verifier/verifier.hpp"

namespace bp::maze {

enum class Cell { Wall, Space, Start, Target };

/// A parsed ASCII maze: spaces are walkable, `s` is the unique start, `t`
/// marks target cells, anything else is a wall. Short lines are right-padded
/// with walls to keep the grid rectangular.
struct MazeModel {
  int width = 0;
  int height = 0;
  std::vector<Cell> cells;  // row-major
  std::pair<int, int> start;                 // (col, row)
  std::vector<std::pair<int, int>> targets;  // (col, row)

  Cell at(int col, int row) const { return cells[row * width + col]; }
  bool in_bounds(int col, int row) const {
    return col >= 0 && col < width && row >= 0 && row < height;
  }
  bool walkable(int col, int row) const {
    return in_bounds(col, row) && at(col, row) != Cell::Wall;
  }
};

/// A walker path: consecutive cells are 4-adjacent, the first is the start,
/// the last is a target, and no cell is a wall.
struct MazePath {
  std::vector<std::pair<int, int>> cells;
};

/// Parses the maze DSL. Lines are LF or CRLF separated; tabs are rejected.
/// Throws MazeParseError (with 1-based line/column) on zero or multiple `s`,
/// zero `t`, tabs, or empty input.
MazeModel parse_maze(std::string_view text);

/// The walker-entered-this-cell event, named `Enter(c,r)` and carrying
/// {col, row} data so path extraction needs no name parsing.
Event enter_event(int col, int row);

/// Matches every entry event, whatever its coordinates.
EventSet any_entrance();

const Event& target_found_event();

/// Generates the maze b-program: one b-thread per walkable cell that waits
/// for the walker to enter an adjacent cell and then requests that it enter
/// its own (withdrawing when another cell wins); a start b-thread requesting
/// the initial entry; and per-target announcers that request TARGET_FOUND
/// while blocking all other events. Running it performs a valid random walk.
BProgram build_maze_bprogram(const MazeModel& maze);

/// The maze program augmented for solving: a requirement b-thread asserting
/// that TARGET_FOUND never fires, plus the onlyOnce simplifier, which blocks
/// every previously seen entry. The simplifier prunes the search space while
/// keeping it sound: for every path that revisits cells there is a
/// visit-once path reaching the same target.
BProgram build_maze_solver_program(const MazeModel& maze);

/// The walker path encoded in a counterexample trace's entry events.
MazePath path_from_trace(const std::vector<Event>& trace);

/// Solves by verification: verifies the solver program and maps a
/// counterexample to a path. No counterexample means no path exists.
/// Deadlock detection is forced off: the simplifier strands the walker by
/// design.
std::optional<MazePath> solve_maze(const MazeModel& maze,
                                   VerificationSettings settings = {});

}  // namespace bp::maze
