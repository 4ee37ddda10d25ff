#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "bp/core/value.hpp"

namespace bp {

/// A named, optionally data-carrying event: the unit of all inter-b-thread
/// communication. Two events are equal iff their names are equal and their
/// data values are deeply equal.
class Event {
 public:
  explicit Event(std::string name);  // throws std::invalid_argument if empty
  Event(std::string name, Value data);

  const std::string& name() const { return name_; }
  const std::optional<Value>& data() const { return data_; }

  friend bool operator==(const Event& a, const Event& b) {
    return a.name_ == b.name_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Event& a, const Event& b) { return !(a == b); }

  std::uint64_t hash() const;

  friend std::ostream& operator<<(std::ostream& out, const Event& e);

 private:
  std::string name_;
  std::optional<Value> data_;
};

}  // namespace bp
