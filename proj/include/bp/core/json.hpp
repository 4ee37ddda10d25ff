#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "bp/core/event.hpp"
#include "bp/core/value.hpp"

namespace bp {

/// Canonical text encoding of an event for traces: an object with `name`
/// first and optional `data`, compact, map keys sorted, e.g.
/// `{"name":"HOT"}` or `{"name":"Enter(2,3)","data":{"col":2,"row":3}}`.
std::string encode_event(const Event& e);

nlohmann::ordered_json event_to_json(const Event& e);
nlohmann::ordered_json value_to_json(const Value& v);

/// Parses the canonical encoding back. Throws bp::Error on malformed input.
Event decode_event(std::string_view text);
Value value_from_json(const nlohmann::json& j);

}  // namespace bp
