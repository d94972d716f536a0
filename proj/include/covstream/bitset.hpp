#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "covstream/bitops.hpp"

namespace covstream {

/// Fixed-universe bitset packed into 64-bit words. All heavy operations go
/// through the runtime-selected bit kernels.
class DenseBitset {
 public:
  DenseBitset() = default;
  explicit DenseBitset(uint32_t n_bits)
      : n_bits_(n_bits), words_((n_bits + 63) / 64, 0) {}

  static DenseBitset of_elements(uint32_t n_bits, std::span<const uint32_t> elements) {
    DenseBitset b(n_bits);
    for (uint32_t e : elements) b.set(e);
    return b;
  }

  uint32_t size_bits() const { return n_bits_; }
  size_t word_count() const { return words_.size(); }
  const uint64_t* data() const { return words_.data(); }
  uint64_t* data() { return words_.data(); }
  std::span<const uint64_t> words() const { return words_; }

  void set(uint32_t i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(uint32_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  void set_all() {
    std::fill(words_.begin(), words_.end(), ~uint64_t{0});
    trim_tail();
  }

  uint64_t count() const { return bitops::active().popcount(words_.data(), words_.size()); }

  void or_with(const DenseBitset& other) {
    bitops::active().or_inplace(words_.data(), other.words_.data(), words_.size());
  }

  uint64_t or_count(const DenseBitset& other) const {
    return bitops::active().or_popcount(words_.data(), other.words_.data(), words_.size());
  }

  /// popcount(this & ~other)
  uint64_t andnot_count(const DenseBitset& other) const {
    return bitops::active().andnot_popcount(words_.data(), other.words_.data(), words_.size());
  }

  void and_with_not(const DenseBitset& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  }

  std::vector<uint32_t> to_elements() const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < n_bits_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  bool operator==(const DenseBitset&) const = default;

 private:
  void trim_tail() {
    const uint32_t rem = n_bits_ & 63;
    if (rem != 0 && !words_.empty()) words_.back() &= (uint64_t{1} << rem) - 1;
  }

  uint32_t n_bits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace covstream
