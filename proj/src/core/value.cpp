#include "bp/core/value.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bp/core/hash.hpp"

namespace bp {

Value::Value(double d) {
  if (!std::isfinite(d)) {
    throw std::invalid_argument("Value: float data must be finite");
  }
  if (d == 0.0) d = 0.0;  // collapse -0.0 so equality and hashing agree
  repr_ = d;
}

namespace {

void feed(CanonicalHasher& h, const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Null:
      h.tag('n');
      break;
    case Value::Kind::Bool:
      h.tag('b');
      h.byte(v.as_bool() ? 1 : 0);
      break;
    case Value::Kind::Int:
      h.tag('i');
      h.i64(v.as_int());
      break;
    case Value::Kind::Float:
      h.tag('d');
      h.f64(v.as_float());
      break;
    case Value::Kind::Text:
      h.tag('s');
      h.text(v.as_text());
      break;
    case Value::Kind::List: {
      h.tag('l');
      const auto& items = v.as_list();
      h.u64(items.size());
      for (const auto& item : items) feed(h, item);
      break;
    }
    case Value::Kind::Map: {
      h.tag('m');
      const auto& entries = v.as_map();
      h.u64(entries.size());
      for (const auto& [key, val] : entries) {  // std::map: key-sorted
        h.text(key);
        feed(h, val);
      }
      break;
    }
  }
}

void render(std::ostringstream& out, const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Null:
      out << "null";
      break;
    case Value::Kind::Bool:
      out << (v.as_bool() ? "true" : "false");
      break;
    case Value::Kind::Int:
      out << v.as_int();
      break;
    case Value::Kind::Float:
      out << v.as_float();
      break;
    case Value::Kind::Text:
      out << '"' << v.as_text() << '"';
      break;
    case Value::Kind::List: {
      out << '[';
      bool first = true;
      for (const auto& item : v.as_list()) {
        if (!first) out << ',';
        first = false;
        render(out, item);
      }
      out << ']';
      break;
    }
    case Value::Kind::Map: {
      out << '{';
      bool first = true;
      for (const auto& [key, val] : v.as_map()) {
        if (!first) out << ',';
        first = false;
        out << '"' << key << "\":";
        render(out, val);
      }
      out << '}';
      break;
    }
  }
}

}  // namespace

std::uint64_t Value::hash() const {
  CanonicalHasher h;
  feed(h, *this);
  return h.digest();
}

std::string Value::to_string() const {
  std::ostringstream out;
  render(out, *this);
  return out.str();
}

}  // namespace bp
