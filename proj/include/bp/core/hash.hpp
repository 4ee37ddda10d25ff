#pragma once

#include <bit>
#include <cstdint>
#include <string_view>

namespace bp {

/// FNV-1a accumulator over a canonical, platform-independent byte encoding.
/// Every hashable engine type feeds itself through one of these with a
/// leading tag byte, so distinct shapes cannot collide by construction order.
class CanonicalHasher {
 public:
  void byte(std::uint8_t b) {
    h_ ^= b;
    h_ *= 0x100000001b3ULL;
  }

  void tag(char c) { byte(static_cast<std::uint8_t>(c)); }

  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) byte(static_cast<std::uint8_t>(v >> (8 * i)));
  }

  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }

  void f64(double d) { u64(std::bit_cast<std::uint64_t>(d)); }

  void text(std::string_view s) {
    u64(s.size());
    for (char c : s) byte(static_cast<std::uint8_t>(c));
  }

  std::uint64_t digest() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace bp
