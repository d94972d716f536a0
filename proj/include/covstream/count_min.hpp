#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "covstream/hashing.hpp"
#include "covstream/recovery_cell.hpp"

namespace covstream {

enum class RecoveryStatus : uint8_t { kExact, kFail };

struct SparseEntry {
  std::vector<uint64_t> key_words;
  int64_t count = 0;
};

struct RecoveryResult {
  RecoveryStatus status = RecoveryStatus::kFail;
  // On kExact: the vector. On kFail: a partial candidate list that the
  // caller must validate.
  std::vector<SparseEntry> entries;
};

/// Linear count-min grid over keyed payloads, signed so that deletions may
/// drive counters negative transiently. Cells carry recovery sums, so the
/// same structure answers point estimates (min over rows) and reconstructs
/// s-sparse nonnegative vectors exactly by peeling, with failure
/// probability controlled by width >= 4s and depth ~ log2(s/delta).
class CountMinSketch {
 public:
  CountMinSketch() = default;
  CountMinSketch(uint32_t width, uint32_t depth, size_t key_width, uint64_t seed);

  uint32_t width() const { return width_; }
  uint32_t depth() const { return depth_; }
  size_t key_width() const { return key_width_; }

  void update(std::span<const uint64_t> key_words, int64_t delta);

  /// Upper bound on the key's count when all counts are nonnegative.
  int64_t point_estimate(std::span<const uint64_t> key_words) const;

  /// Peeling reconstruction. Exact for s-sparse nonnegative vectors with
  /// probability >= 1 - delta under the sizing rule above.
  RecoveryResult recover(uint32_t sparsity_hint = 0) const;

  int64_t l1_estimate_row0() const;
  uint64_t state_words() const;

  bool looks_zero() const;

 private:
  size_t cell_index(uint32_t row, uint32_t col) const { return row * width_ + col; }
  std::span<uint64_t> sums(uint32_t row, uint32_t col) {
    return {sums_.data() + cell_index(row, col) * key_width_, key_width_};
  }
  std::span<const uint64_t> sums(uint32_t row, uint32_t col) const {
    return {sums_.data() + cell_index(row, col) * key_width_, key_width_};
  }
  uint32_t column_of(uint32_t row, uint64_t fp) const {
    return static_cast<uint32_t>(row_hashes_[row].eval_range(fp, width_));
  }

  uint32_t width_ = 0;
  uint32_t depth_ = 0;
  size_t key_width_ = 0;
  uint64_t seed_ = 0;
  uint64_t fp_seed_ = 0;
  std::vector<KWiseHash> row_hashes_;
  std::vector<RecoveryCell> cells_;
  std::vector<uint64_t> sums_;

  friend class SketchCodec;
};

}  // namespace covstream
