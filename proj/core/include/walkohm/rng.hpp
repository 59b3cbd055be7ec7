#pragma once

#include <cstdint>

namespace walkohm {

/// splitmix64 mixing step; also used to derive independent sub-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic sub-seed for stream (a, b) of a master seed. Walk w started
/// at vertex v uses sub_seed(seed, v, w), which makes Monte Carlo results
/// independent of how walks are partitioned across threads.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = seed;
  std::uint64_t h = splitmix64(s);
  s ^= a * 0x9e3779b97f4a7c15ULL + 0x165667b19e3779f9ULL;
  h ^= splitmix64(s);
  s ^= b * 0xd1b54a32d192ed03ULL + 0x2545f4914f6cdd1dULL;
  h ^= splitmix64(s);
  return h;
}

/// xoshiro256** generator. Named, seedable and cheap; all stochastic code in
/// the library draws from this type so runs are reproducible bit-for-bit
/// across platforms (no <random> distributions are used).
class SplitRng {
public:
  explicit SplitRng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
  }

  /// Independent child stream identified by (a, b), derived from the seed
  /// this generator was constructed with.
  SplitRng sub(std::uint64_t a, std::uint64_t b) const {
    return SplitRng(sub_seed(seed_, a, b));
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [0, n), n > 0. Modulo bias is irrelevant at the
  /// ranges used here (vertex counts and degrees).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t seed_;
  std::uint64_t state_[4] = {};
};

}  // namespace walkohm
