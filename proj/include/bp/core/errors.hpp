#pragma once

#include <stdexcept>
#include <string>

namespace bp {

/// Base class for all engine-raised errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Misconfigured program, strategy, or verification settings. These indicate
/// programmer mistakes, not specification breaches, and are never reported as
/// verification violations.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A b-thread step function failed (threw) outside of the assert mechanism.
/// The message names the offending b-thread.
class EngineError : public Error {
 public:
  using Error::Error;
};

/// Enqueue attempted on a closed external event queue.
class QueueClosedError : public Error {
 public:
  using Error::Error;
};

/// Maze DSL parse failure with source position (1-based).
class MazeParseError : public Error {
 public:
  MazeParseError(const std::string& message, int line, int column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace bp
