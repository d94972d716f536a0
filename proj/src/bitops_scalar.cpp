#include <bit>

#include "covstream/bitops.hpp"

namespace covstream::bitops {
namespace {

uint64_t popcount_scalar(const uint64_t* words, size_t len) {
  uint64_t total = 0;
  for (size_t i = 0; i < len; ++i) total += static_cast<uint64_t>(std::popcount(words[i]));
  return total;
}

void or_inplace_scalar(uint64_t* acc, const uint64_t* src, size_t len) {
  for (size_t i = 0; i < len; ++i) acc[i] |= src[i];
}

uint64_t or_popcount_scalar(const uint64_t* a, const uint64_t* b, size_t len) {
  uint64_t total = 0;
  for (size_t i = 0; i < len; ++i) total += static_cast<uint64_t>(std::popcount(a[i] | b[i]));
  return total;
}

uint64_t andnot_popcount_scalar(const uint64_t* a, const uint64_t* b, size_t len) {
  uint64_t total = 0;
  for (size_t i = 0; i < len; ++i) total += static_cast<uint64_t>(std::popcount(a[i] & ~b[i]));
  return total;
}

void once_multi_accumulate_scalar(uint64_t* once, uint64_t* multi, const uint64_t* src,
                                  size_t len) {
  for (size_t i = 0; i < len; ++i) {
    const uint64_t w = src[i];
    multi[i] |= once[i] & w;
    once[i] |= w;
  }
}

uint64_t unique_after_add_popcount_scalar(const uint64_t* once, const uint64_t* multi,
                                          const uint64_t* src, size_t len) {
  uint64_t total = 0;
  for (size_t i = 0; i < len; ++i) {
    const uint64_t w = src[i];
    const uint64_t new_once = once[i] | w;
    const uint64_t new_multi = multi[i] | (once[i] & w);
    total += static_cast<uint64_t>(std::popcount(new_once & ~new_multi));
  }
  return total;
}

}  // namespace

const Kernels& scalar() {
  static const Kernels k{
      "scalar",
      &popcount_scalar,
      &or_inplace_scalar,
      &or_popcount_scalar,
      &andnot_popcount_scalar,
      &once_multi_accumulate_scalar,
      &unique_after_add_popcount_scalar,
  };
  return k;
}

}  // namespace covstream::bitops
