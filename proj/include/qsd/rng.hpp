#pragma once

#include <cstdint>

namespace qsd {

// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
// generators", OOPSLA 2014). A 64-bit state is advanced by a fixed odd
// constant and scrambled; every seed gives an independent-looking stream of
// period 2^64. Used for all simulation randomness because substreams are
// cheap to derive, which keeps sharded runs partition-invariant.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53 significant bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Seed of the substream a given shard draws from: one scramble round of the
// user seed mixed with the shard index. Results of a sharded run depend only
// on (seed, shard layout), never on scheduling.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t shard) {
  SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL * (shard + 1)));
  return g.next();
}

}  // namespace qsd
