#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace covstream {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives an independent child seed from (base, tag, index). Every random
/// component in a run pulls its seed through this, so one 64-bit run seed
/// fully determines all randomness.
inline uint64_t derive_seed(uint64_t base, uint64_t tag, uint64_t index = 0) {
  uint64_t s = base;
  (void)splitmix64(s);
  s ^= 0x6a09e667f3bcc909ULL * (tag + 1);
  (void)splitmix64(s);
  s ^= 0xbb67ae8584caa73bULL * (index + 1);
  uint64_t out = s;
  return splitmix64(out);
}

// Stream component tags. Numeric on purpose: stable across refactors.
namespace seed_tag {
inline constexpr uint64_t kF0Rep = 1;
inline constexpr uint64_t kL0Fingerprint = 2;
inline constexpr uint64_t kL0Level = 3;
inline constexpr uint64_t kCmRow = 4;
inline constexpr uint64_t kCmFingerprint = 5;
inline constexpr uint64_t kColoring = 6;
inline constexpr uint64_t kPatternSampler = 7;
inline constexpr uint64_t kBandRate = 8;
inline constexpr uint64_t kSubsampleHash = 9;
inline constexpr uint64_t kGenerator = 10;
inline constexpr uint64_t kExtraction = 11;
inline constexpr uint64_t kSetCoverPass = 12;
inline constexpr uint64_t kTopkSketch = 13;
}  // namespace seed_tag

/// Self-contained deterministic PRNG (splitmix64 stream). Used instead of
/// <random> distributions so generated instances are byte-identical across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform in [0, bound). bound must be nonzero.
  uint64_t below(uint64_t bound) {
    // Rejection sampling on the top of the range keeps the draw unbiased.
    const uint64_t limit = bound * (UINT64_MAX / bound);
    uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi] inclusive.
  uint64_t range(uint64_t lo, uint64_t hi) { return lo + below(hi - lo + 1); }

  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  uint64_t state_;
};

}  // namespace covstream
