#include "bp/maze/maze.hpp"

#include <algorithm>
#include <string>

#include "bp/core/errors.hpp"
#include "bp/core/script.hpp"

namespace bp::maze {

namespace {

constexpr int kNeighborOffsets[4][2] = {{0, -1}, {-1, 0}, {1, 0}, {0, 1}};

std::string cell_coords(int col, int row) {
  return "(" + std::to_string(col) + "," + std::to_string(row) + ")";
}

Value event_as_value(const Event& e) {
  Value::Map m;
  m.emplace("name", e.name());
  if (e.data()) m.emplace("data", *e.data());
  return Value(std::move(m));
}

Event event_from_value(const Value& v) {
  const auto& m = v.as_map();
  auto data = m.find("data");
  if (data != m.end()) return Event(m.at("name").as_text(), data->second);
  return Event(m.at("name").as_text());
}

}  // namespace

MazeModel parse_maze(std::string_view text) {
  if (text.empty()) throw MazeParseError("empty maze description", 1, 1);

  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) {
    if (current.back() == '\r') current.pop_back();
    lines.push_back(std::move(current));
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw MazeParseError("empty maze description", 1, 1);

  MazeModel maze;
  maze.height = static_cast<int>(lines.size());
  maze.width = 0;
  for (const auto& line : lines) {
    maze.width = std::max(maze.width, static_cast<int>(line.size()));
  }
  if (maze.width == 0) throw MazeParseError("empty maze description", 1, 1);

  bool have_start = false;
  for (int row = 0; row < maze.height; ++row) {
    const std::string& line = lines[row];
    for (int col = 0; col < maze.width; ++col) {
      // Short lines are padded with walls on the right.
      const char c = col < static_cast<int>(line.size()) ? line[col] : '#';
      if (c == '\t') {
        throw MazeParseError("tabs are not allowed in maze descriptions",
                             row + 1, col + 1);
      }
      Cell cell = Cell::Wall;
      if (c == ' ') {
        cell = Cell::Space;
      } else if (c == 's') {
        if (have_start) {
          throw MazeParseError("multiple start cells", row + 1, col + 1);
        }
        have_start = true;
        cell = Cell::Start;
        maze.start = {col, row};
      } else if (c == 't') {
        cell = Cell::Target;
        maze.targets.push_back({col, row});
      }
      maze.cells.push_back(cell);
    }
  }
  if (!have_start) throw MazeParseError("no start cell ('s') found", 1, 1);
  if (maze.targets.empty()) {
    throw MazeParseError("no target cell ('t') found", 1, 1);
  }
  return maze;
}

Event enter_event(int col, int row) {
  Value::Map data;
  data.emplace("col", Value(static_cast<std::int64_t>(col)));
  data.emplace("row", Value(static_cast<std::int64_t>(row)));
  return Event("Enter" + cell_coords(col, row), Value(std::move(data)));
}

EventSet any_entrance() { return EventSet::name_prefix("Enter("); }

const Event& target_found_event() {
  static const Event e("TARGET_FOUND");
  return e;
}

namespace {

EventSet adjacent_entries(const MazeModel& maze, int col, int row) {
  std::vector<EventSet> members;
  for (const auto& d : kNeighborOffsets) {
    const int nc = col + d[0];
    const int nr = row + d[1];
    if (maze.walkable(nc, nr)) {
      members.push_back(EventSet::exact(enter_event(nc, nr)));
    }
  }
  return EventSet::any_of(std::move(members));
}

}  // namespace

BProgram build_maze_bprogram(const MazeModel& maze) {
  BProgram program("maze");

  for (int row = 0; row < maze.height; ++row) {
    for (int col = 0; col < maze.width; ++col) {
      if (!maze.walkable(col, row)) continue;
      // Space cells attract the walker from adjacent cells; if the strategy
      // sends it elsewhere, waiting on anyEntrance withdraws the request.
      program.add(make_script_bthread(
          "cell(c:" + std::to_string(col) + " r:" + std::to_string(row) + ")",
          {
              SyncStatement{.wait_for = adjacent_entries(maze, col, row)},
              SyncStatement{.request = {enter_event(col, row)},
                            .wait_for = any_entrance()},
          }));
    }
  }

  program.add(make_script_bthread(
      "start@" + cell_coords(maze.start.first, maze.start.second),
      {SyncStatement{
          .request = {enter_event(maze.start.first, maze.start.second)}}},
      ScriptEnd::finish()));

  for (const auto& [col, row] : maze.targets) {
    program.add(make_script_bthread(
        "target@" + cell_coords(col, row),
        {
            SyncStatement{.wait_for = EventSet::exact(enter_event(col, row))},
            SyncStatement{.request = {target_found_event()},
                          .block = EventSet::all_except(
                              {target_found_event()})},
        },
        ScriptEnd::finish()));
  }
  return program;
}

namespace {

/// Listing-6-style simplifier: waits for any entrance and blocks every entry
/// seen so far. The block list is kept canonically sorted so that states
/// differing only in visit order collapse in the visited store.
BThreadDef make_only_once() {
  auto step = [](const Value& state, const Resume& resume) -> StepOutcome {
    Value::List seen =
        resume.is_start() ? Value::List{} : state.as_list();
    if (!resume.is_start()) {
      Value v = event_as_value(resume.event());
      auto pos = std::lower_bound(
          seen.begin(), seen.end(), v,
          [](const Value& a, const Value& b) { return a.hash() < b.hash(); });
      seen.insert(pos, std::move(v));
    }
    std::vector<Event> blocked;
    blocked.reserve(seen.size());
    for (const auto& v : seen) blocked.push_back(event_from_value(v));
    SyncStatement stmt{.wait_for = any_entrance(),
                       .block = EventSet::of_events(std::move(blocked))};
    return {Value(std::move(seen)), StepResult::sync(std::move(stmt))};
  };
  return BThreadDef{"onlyOnce", 0, Value(Value::List{}), std::move(step)};
}

BThreadDef make_target_requirement() {
  return make_script_bthread(
      "TargetNeverFound",
      {SyncStatement{.wait_for = EventSet::exact(target_found_event())}},
      ScriptEnd::fail("target found"));
}

}  // namespace

BProgram build_maze_solver_program(const MazeModel& maze) {
  BProgram program = build_maze_bprogram(maze);
  program.add(make_target_requirement());
  program.add(make_only_once());
  return program;
}

MazePath path_from_trace(const std::vector<Event>& trace) {
  MazePath path;
  const EventSet entries = any_entrance();
  for (const auto& event : trace) {
    if (!entries.contains(event)) continue;
    const auto& data = event.data()->as_map();
    path.cells.push_back({static_cast<int>(data.at("col").as_int()),
                          static_cast<int>(data.at("row").as_int())});
  }
  return path;
}

std::optional<MazePath> solve_maze(const MazeModel& maze,
                                   VerificationSettings settings) {
  settings.detect_deadlocks = false;
  VerificationResult result = verify(build_maze_solver_program(maze), settings);
  if (result.verdict != VerificationResult::Verdict::AssertionViolation) {
    return std::nullopt;
  }
  return path_from_trace(result.trace);
}

}  // namespace bp::maze
