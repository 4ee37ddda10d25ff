#include "bp/core/event.hpp"

#include <stdexcept>

#include "bp/core/hash.hpp"

namespace bp {

Event::Event(std::string name) : name_(std::move(name)) {
  if (name_.empty()) {
    throw std::invalid_argument("Event: name must be non-empty");
  }
}

Event::Event(std::string name, Value data)
    : name_(std::move(name)), data_(std::move(data)) {
  if (name_.empty()) {
    throw std::invalid_argument("Event: name must be non-empty");
  }
}

std::uint64_t Event::hash() const {
  CanonicalHasher h;
  h.tag('E');
  h.text(name_);
  if (data_) {
    h.tag('+');
    h.u64(data_->hash());
  } else {
    h.tag('-');
  }
  return h.digest();
}

std::ostream& operator<<(std::ostream& out, const Event& e) {
  out << e.name_;
  if (e.data_) out << e.data_->to_string();
  return out;
}

}  // namespace bp
