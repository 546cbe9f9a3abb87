#pragma once

#include <cstdint>

namespace ogplab {

// Splittable deterministic random stream (SplitMix64 core).
//
// The whole harness draws randomness through this class so that identical
// seeds give identical objects on every run. Child streams for parallel
// trials come from derive(): child i of seed s is seeded with
// mix64(s ^ (0x9E3779B97F4A7C15 * (i + 1))), so trial outputs do not depend
// on scheduling order.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1), 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in {0, ..., bound-1}, unbiased via rejection. bound must be > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t r;
    do {
      r = next_u64();
    } while (r >= limit);
    return r % bound;
  }

  // Standard normal draw (Marsaglia polar, no cached spare).
  double next_gaussian();

  // Independent child stream; derivation depends only on the original seed.
  SeededRng derive(std::uint64_t stream) const {
    return SeededRng(mix64(seed_ ^ (0x9E3779B97F4A7C15ULL * (stream + 1))));
  }

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace ogplab
