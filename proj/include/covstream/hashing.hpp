#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "covstream/errors.hpp"
#include "covstream/rng.hpp"

namespace covstream {

/// Arithmetic over the Mersenne prime 2^61 - 1.
namespace field {

inline constexpr uint64_t kPrime = (uint64_t{1} << 61) - 1;

inline uint64_t reduce(unsigned __int128 x) {
  uint64_t lo = static_cast<uint64_t>(x & kPrime);
  uint64_t hi = static_cast<uint64_t>(x >> 61);
  uint64_t r = lo + hi;
  if (r >= kPrime) r -= kPrime;
  return r;
}

inline uint64_t mulmod(uint64_t a, uint64_t b) {
  return reduce(static_cast<unsigned __int128>(a) * b);
}

inline uint64_t addmod(uint64_t a, uint64_t b) {
  uint64_t r = a + b;
  if (r >= kPrime) r -= kPrime;
  return r;
}

}  // namespace field

/// t-wise independent hash family: a random degree-(t-1) polynomial over
/// GF(2^61 - 1), evaluated by Horner's rule. Output is uniform over
/// [0, kPrime); range mappings introduce O(range / 2^61) bias.
class KWiseHash {
 public:
  KWiseHash() = default;

  KWiseHash(uint32_t independence, uint64_t seed) : independence_(independence), seed_(seed) {
    if (independence == 0) throw ValidationError("hash independence must be >= 1");
    uint64_t s = seed;
    coeffs_.resize(independence);
    for (auto& c : coeffs_) c = splitmix64(s) % field::kPrime;
    // A zero leading coefficient would silently drop the independence degree.
    while (independence_ > 1 && coeffs_.back() == 0) coeffs_.back() = splitmix64(s) % field::kPrime;
  }

  uint32_t independence() const { return independence_; }
  uint64_t seed() const { return seed_; }

  /// Uniform value in [0, 2^61 - 1).
  uint64_t eval(uint64_t key) const {
    const uint64_t x = key % field::kPrime;
    uint64_t acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;)
      acc = field::addmod(field::mulmod(acc, x), coeffs_[i]);
    return acc;
  }

  /// Value in [0, range).
  uint64_t eval_range(uint64_t key, uint64_t range) const { return eval(key) % range; }

  /// Bernoulli(p) indicator, consistent across calls for the same key.
  bool indicator(uint64_t key, double p) const {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    const auto threshold = static_cast<uint64_t>(p * static_cast<double>(field::kPrime));
    return eval(key) < threshold;
  }

  const std::vector<uint64_t>& coefficients() const { return coeffs_; }

 private:
  uint32_t independence_ = 0;
  uint64_t seed_ = 0;
  std::vector<uint64_t> coeffs_;
};

/// Polynomial fingerprint of a word sequence, for checksums in recovery cells.
inline uint64_t fingerprint_words(std::span<const uint64_t> words, uint64_t seed) {
  uint64_t s = seed;
  const uint64_t base = (splitmix64(s) % (field::kPrime - 2)) + 2;
  uint64_t acc = 1;
  for (uint64_t w : words) {
    acc = field::mulmod(acc, base);
    acc = field::addmod(acc, w % field::kPrime);
    acc = field::addmod(acc, field::mulmod(w >> 61, 7));
  }
  return acc;
}

}  // namespace covstream
