#include "bp/core/json.hpp"

#include <limits>

#include "bp/core/errors.hpp"

namespace bp {

nlohmann::ordered_json value_to_json(const Value& v) {
  using json = nlohmann::ordered_json;
  switch (v.kind()) {
    case Value::Kind::Null:
      return nullptr;
    case Value::Kind::Bool:
      return v.as_bool();
    case Value::Kind::Int:
      return v.as_int();
    case Value::Kind::Float:
      return v.as_float();
    case Value::Kind::Text:
      return v.as_text();
    case Value::Kind::List: {
      json out = json::array();
      for (const auto& item : v.as_list()) out.push_back(value_to_json(item));
      return out;
    }
    case Value::Kind::Map: {
      json out = json::object();
      for (const auto& [key, val] : v.as_map()) {  // already key-sorted
        out[key] = value_to_json(val);
      }
      return out;
    }
  }
  return nullptr;
}

Value value_from_json(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return Value();
    case nlohmann::json::value_t::boolean:
      return Value(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return Value(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned: {
      auto u = j.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(
                  std::numeric_limits<std::int64_t>::max())) {
        throw Error("event data integer out of 64-bit signed range");
      }
      return Value(static_cast<std::int64_t>(u));
    }
    case nlohmann::json::value_t::number_float:
      return Value(j.get<double>());
    case nlohmann::json::value_t::string:
      return Value(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      Value::List items;
      items.reserve(j.size());
      for (const auto& item : j) items.push_back(value_from_json(item));
      return Value(std::move(items));
    }
    case nlohmann::json::value_t::object: {
      Value::Map entries;
      for (auto it = j.begin(); it != j.end(); ++it) {
        entries.emplace(it.key(), value_from_json(it.value()));
      }
      return Value(std::move(entries));
    }
    default:
      throw Error("unsupported JSON value in event data");
  }
}

nlohmann::ordered_json event_to_json(const Event& e) {
  nlohmann::ordered_json out;
  out["name"] = e.name();
  if (e.data()) out["data"] = value_to_json(*e.data());
  return out;
}

std::string encode_event(const Event& e) { return event_to_json(e).dump(); }

Event decode_event(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed event encoding: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("name") || !j["name"].is_string()) {
    throw Error("malformed event encoding: expected {\"name\":...}");
  }
  auto name = j["name"].get<std::string>();
  if (j.contains("data")) return Event(name, value_from_json(j["data"]));
  return Event(name);
}

}  // namespace bp
