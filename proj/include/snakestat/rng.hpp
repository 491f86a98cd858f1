#pragma once

#include <cstdint>

namespace snakestat {

// Counter-based stream generator, algorithm id "splitmix64-counter".
//
// Output word i of stream (seed, stream) is splitmix64(key + i) where
// key = seed XOR (stream * 0x9E3779B97F4A7C15).  Every draw is a pure
// function of (seed, stream, counter), so parallel workers can own
// disjoint streams and any run is reproducible from the seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(seed ^ (stream * 0x9E3779B97F4A7C15ull)), ctr_(0) {}

  std::uint64_t next_u64() { return mix(key_ + 0x9E3779B97F4A7C15ull * ++ctr_); }

  // Uniform in [0, 1).
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in {0, ..., n-1}; n must be positive.
  std::uint32_t next_below(std::uint32_t n) {
    return static_cast<std::uint32_t>(next_double() * n) % n;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t ctr_;
};

}  // namespace snakestat
