#pragma once

#include <cstdint>

namespace pathuniq {

// Fixed-output generators (Blackman/Vigna public-domain algorithms), so runs
// reproduce bit-for-bit from a seed regardless of standard-library internals.
// std::uniform_int_distribution is implementation-defined and never used.
inline constexpr const char* kRngAlgorithm = "splitmix64+xoshiro256**";

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
  }

  // Independent stream for a restart chain: the chain-th splitmix output of
  // the master seed becomes the stream seed.
  static Xoshiro256ss for_chain(std::uint64_t seed, std::uint64_t chain) {
    SplitMix64 sm(seed);
    std::uint64_t sub = 0;
    for (std::uint64_t i = 0; i <= chain; ++i) sub = sm.next();
    return Xoshiro256ss(sub);
  }

  std::uint64_t next() {
    auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform value in [0, bound) by rejection; unbiased and portable.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t s_[4];
};

}  // namespace pathuniq
