#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bp {

/// A structured value: the closed universe used for event data, b-thread
/// state, and strategy hints.
///
/// Values are immutable once built, deeply comparable, and canonically
/// hashable, which is what visited-state stores require. Construction rejects
/// NaN and infinite floats so that equality and hashing stay coherent;
/// negative zero is normalized to zero for the same reason. Map iteration is
/// key-ordered, so insertion order never leaks into equality or hashes.
class Value {
 public:
  enum class Kind { Null, Bool, Int, Float, Text, List, Map };

  using List = std::vector<Value>;
  using Map = std::map<std::string, Value, std::less<>>;

  Value() : repr_(nullptr) {}
  Value(std::nullptr_t) : repr_(nullptr) {}
  Value(bool b) : repr_(b) {}
  Value(int v) : repr_(static_cast<std::int64_t>(v)) {}
  Value(long v) : repr_(static_cast<std::int64_t>(v)) {}
  Value(long long v) : repr_(static_cast<std::int64_t>(v)) {}
  Value(double d);  // throws std::invalid_argument on NaN/inf
  Value(const char* s) : repr_(std::string(s)) {}
  Value(std::string_view s) : repr_(std::string(s)) {}
  Value(std::string s) : repr_(std::move(s)) {}
  Value(List items) : repr_(std::move(items)) {}
  Value(Map entries) : repr_(std::move(entries)) {}

  Kind kind() const { return static_cast<Kind>(repr_.index()); }
  bool is_null() const { return kind() == Kind::Null; }

  bool as_bool() const { return std::get<bool>(repr_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(repr_); }
  double as_float() const { return std::get<double>(repr_); }
  const std::string& as_text() const { return std::get<std::string>(repr_); }
  const List& as_list() const { return std::get<List>(repr_); }
  const Map& as_map() const { return std::get<Map>(repr_); }

  friend bool operator==(const Value& a, const Value& b) {
    return a.repr_ == b.repr_;
  }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

  /// Stable 64-bit hash; equal values hash equal, across runs and platforms.
  std::uint64_t hash() const;

  /// Short diagnostic rendering (JSON-like).
  std::string to_string() const;

 private:
  std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, List,
               Map>
      repr_;
};

}  // namespace bp
