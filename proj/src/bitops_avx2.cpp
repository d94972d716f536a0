// AVX2 variants of the bit kernels. Compiled with -mavx2; only reachable
// after the runtime cpuid check in bitops_dispatch.cpp.

#include "covstream/bitops.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <bit>

namespace covstream::bitops {
namespace {

// Mula's vpshufb nibble-LUT popcount for one 256-bit vector, returned as
// four per-64-bit-lane byte sums.
inline __m256i popcount256(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
  const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline uint64_t hsum256(__m256i acc) {
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

uint64_t popcount_avx2(const uint64_t* words, size_t len) {
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    acc = _mm256_add_epi64(acc, popcount256(v));
  }
  uint64_t total = hsum256(acc);
  for (; i < len; ++i) total += static_cast<uint64_t>(std::popcount(words[i]));
  return total;
}

void or_inplace_avx2(uint64_t* acc, const uint64_t* src, size_t len) {
  size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), _mm256_or_si256(a, b));
  }
  for (; i < len; ++i) acc[i] |= src[i];
}

uint64_t or_popcount_avx2(const uint64_t* a, const uint64_t* b, size_t len) {
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, popcount256(_mm256_or_si256(va, vb)));
  }
  uint64_t total = hsum256(acc);
  for (; i < len; ++i) total += static_cast<uint64_t>(std::popcount(a[i] | b[i]));
  return total;
}

uint64_t andnot_popcount_avx2(const uint64_t* a, const uint64_t* b, size_t len) {
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // _mm256_andnot_si256(x, y) = ~x & y
    acc = _mm256_add_epi64(acc, popcount256(_mm256_andnot_si256(vb, va)));
  }
  uint64_t total = hsum256(acc);
  for (; i < len; ++i) total += static_cast<uint64_t>(std::popcount(a[i] & ~b[i]));
  return total;
}

void once_multi_accumulate_avx2(uint64_t* once, uint64_t* multi, const uint64_t* src, size_t len) {
  size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256i vonce = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(once + i));
    __m256i vmulti = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(multi + i));
    __m256i vsrc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    vmulti = _mm256_or_si256(vmulti, _mm256_and_si256(vonce, vsrc));
    vonce = _mm256_or_si256(vonce, vsrc);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(multi + i), vmulti);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(once + i), vonce);
  }
  for (; i < len; ++i) {
    const uint64_t w = src[i];
    multi[i] |= once[i] & w;
    once[i] |= w;
  }
}

uint64_t unique_after_add_popcount_avx2(const uint64_t* once, const uint64_t* multi,
                                        const uint64_t* src, size_t len) {
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256i vonce = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(once + i));
    __m256i vmulti = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(multi + i));
    __m256i vsrc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i new_once = _mm256_or_si256(vonce, vsrc);
    __m256i new_multi = _mm256_or_si256(vmulti, _mm256_and_si256(vonce, vsrc));
    acc = _mm256_add_epi64(acc, popcount256(_mm256_andnot_si256(new_multi, new_once)));
  }
  uint64_t total = hsum256(acc);
  for (; i < len; ++i) {
    const uint64_t w = src[i];
    const uint64_t new_once = once[i] | w;
    const uint64_t new_multi = multi[i] | (once[i] & w);
    total += static_cast<uint64_t>(std::popcount(new_once & ~new_multi));
  }
  return total;
}

}  // namespace

const Kernels* avx2_or_null() {
  static const Kernels k{
      "avx2",
      &popcount_avx2,
      &or_inplace_avx2,
      &or_popcount_avx2,
      &andnot_popcount_avx2,
      &once_multi_accumulate_avx2,
      &unique_after_add_popcount_avx2,
  };
  return avx2_supported() ? &k : nullptr;
}

}  // namespace covstream::bitops

#else

namespace covstream::bitops {
const Kernels* avx2_or_null() { return nullptr; }
}  // namespace covstream::bitops

#endif
