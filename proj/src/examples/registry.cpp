#include "bp/examples/registry.hpp"

#include <fstream>
#include <sstream>

#include "bp/core/errors.hpp"
#include "bp/core/script.hpp"
#include "bp/examples/hotcold.hpp"
#include "bp/examples/philosophers.hpp"
#include "bp/examples/ttt.hpp"
#include "bp/maze/maze.hpp"

namespace bp::examples {

namespace {

BProgram make_hotloop() {
  BProgram program("hotloop");
  program.add(make_script_bthread(
      "forever-hot", {SyncStatement{.request = {Event("TICK")}, .hot = true}}));
  return program;
}

BProgram load_maze_program(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read maze file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return maze::build_maze_bprogram(maze::parse_maze(buffer.str()));
}

}  // namespace

std::optional<ExampleInstance> make_example(std::string_view name) {
  const auto simple = make_strategy("simple");
  if (name == "hotcold") return ExampleInstance{build_hotcold(false), simple};
  if (name == "hotcold:balanced") {
    return ExampleInstance{build_hotcold(true), simple};
  }
  if (name.rfind("philosophers:", 0) == 0) {
    const std::string arg(name.substr(13));
    int count = 0;
    try {
      std::size_t used = 0;
      count = std::stoi(arg, &used);
      if (used != arg.size()) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
    return ExampleInstance{build_philosophers(count), simple};
  }
  if (name == "ttt") {
    TttOptions options{.include_strategy = true,
                       .include_simulated_x = true,
                       .include_spec = true};
    return ExampleInstance{build_ttt(options), make_strategy("priority-sync")};
  }
  if (name == "ttt:undefended") {
    TttOptions options{.include_strategy = false,
                       .include_simulated_x = true,
                       .include_spec = true};
    return ExampleInstance{build_ttt(options), make_strategy("priority-sync")};
  }
  if (name == "hotloop") return ExampleInstance{make_hotloop(), simple};
  if (name.rfind("maze:", 0) == 0) {
    return ExampleInstance{load_maze_program(std::string(name.substr(5))),
                           simple};
  }
  return std::nullopt;
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {
      "hotcold",        "hotcold:balanced", "philosophers:<n>", "ttt",
      "ttt:undefended", "hotloop",          "maze:<path>"};
  return names;
}

}  // namespace bp::examples
