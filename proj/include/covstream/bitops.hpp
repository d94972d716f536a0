#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace covstream::bitops {

// Word-packed bit kernels behind the coverage evaluators. The oracle
// enumerates up to ~10^7 set combinations and pays for one pass over the
// bitset words per enumeration node, so these are the hot loops of the
// whole toolkit.
//
// `scalar()` is the reference implementation; `avx2()` is a vector variant
// compiled separately with -mavx2 and selected at runtime when the CPU
// supports it. The two are equivalence-tested word-for-word.
struct Kernels {
  std::string_view name;

  // popcount over words[0..len)
  uint64_t (*popcount)(const uint64_t* words, size_t len);
  // acc[i] |= src[i]
  void (*or_inplace)(uint64_t* acc, const uint64_t* src, size_t len);
  // popcount(a | b) without materializing the union
  uint64_t (*or_popcount)(const uint64_t* a, const uint64_t* b, size_t len);
  // popcount(a & ~b)
  uint64_t (*andnot_popcount)(const uint64_t* a, const uint64_t* b, size_t len);
  // unique-coverage accumulator step: multi |= once & src; once |= src
  void (*once_multi_accumulate)(uint64_t* once, uint64_t* multi, const uint64_t* src, size_t len);
  // popcount of the uniquely-covered mask after virtually adding src:
  // popcount((once | src) & ~(multi | (once & src)))
  uint64_t (*unique_after_add_popcount)(const uint64_t* once, const uint64_t* multi,
                                        const uint64_t* src, size_t len);
};

const Kernels& scalar();

/// Null when the build or the CPU lacks AVX2.
const Kernels* avx2_or_null();

bool avx2_supported();

/// The runtime-selected backend. Honors force_backend() and the
/// COVSTREAM_FORCE_SCALAR environment variable.
const Kernels& active();

/// "scalar", "avx2", or "auto". Unknown names throw.
void force_backend(std::string_view name);

}  // namespace covstream::bitops
