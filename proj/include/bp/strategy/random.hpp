#pragma once

#include <cstdint>

namespace bp {

/// Seeded deterministic random source (splitmix64). The standard engines'
/// distributions are implementation-defined, and traces must be reproducible
/// byte-for-byte across platforms, so the bounded draw is done by hand with
/// rejection sampling. Same seed, same draw sequence, everywhere.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Unbiased uniform draw from [0, n); n must be positive.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace bp
