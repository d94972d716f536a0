#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "covstream/hashing.hpp"

namespace covstream {

/// One sparse-recovery cell: a signed count, per-word wrapping sums of the
/// keyed payload, and a field checksum of count-weighted fingerprints. A
/// cell holding exactly one distinct key surrenders it via exact division,
/// verified by the checksum.
struct RecoveryCell {
  int64_t count = 0;
  uint64_t fp_sum = 0;  // sum of count * fingerprint(key) mod 2^61-1
  // Payload word sums live in a flat external array (cells are stored in
  // grids); helpers below take the slice for this cell.

  bool looks_zero(std::span<const uint64_t> word_sums) const {
    if (count != 0 || fp_sum != 0) return false;
    for (uint64_t w : word_sums)
      if (w != 0) return false;
    return true;
  }
};

inline void cell_apply(RecoveryCell& cell, std::span<uint64_t> word_sums,
                       std::span<const uint64_t> key_words, uint64_t key_fp, int64_t delta) {
  cell.count += delta;
  const uint64_t fp_term = field::mulmod(static_cast<uint64_t>(delta < 0 ? -delta : delta) %
                                             field::kPrime,
                                         key_fp);
  cell.fp_sum = delta < 0 ? field::addmod(cell.fp_sum, field::kPrime - fp_term)
                          : field::addmod(cell.fp_sum, fp_term);
  for (size_t i = 0; i < key_words.size(); ++i)
    word_sums[i] += static_cast<uint64_t>(delta) * key_words[i];  // wrapping two's complement
}

struct CellExtraction {
  std::vector<uint64_t> key_words;
  int64_t count = 0;
};

/// Attempts to read a cell as "one distinct key with positive count".
/// fp_of must map key words to their fingerprint.
template <typename FpFn>
std::optional<CellExtraction> cell_extract_single(const RecoveryCell& cell,
                                                  std::span<const uint64_t> word_sums,
                                                  FpFn&& fp_of) {
  if (cell.count <= 0) return std::nullopt;
  const uint64_t c = static_cast<uint64_t>(cell.count);
  CellExtraction out;
  out.count = cell.count;
  out.key_words.resize(word_sums.size());
  for (size_t i = 0; i < word_sums.size(); ++i) {
    if (word_sums[i] % c != 0) return std::nullopt;
    out.key_words[i] = word_sums[i] / c;
  }
  const uint64_t expect = field::mulmod(c % field::kPrime, fp_of(out.key_words));
  if (expect != cell.fp_sum) return std::nullopt;
  return out;
}

}  // namespace covstream
