#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "covstream/hashing.hpp"
#include "covstream/recovery_cell.hpp"

namespace covstream {

enum class SampleStatus : uint8_t { kOk, kEmpty, kFail };

struct SampleResult {
  SampleStatus status = SampleStatus::kEmpty;
  std::vector<uint64_t> key_words;
  int64_t count = 0;
};

/// Linear l0-sampler over keyed payloads (fixed-width word vectors) under
/// +1/-1 updates. Rows are independent repetitions; within a row, keys fall
/// into nested geometric levels selected by an 8-wise hash of the key
/// fingerprint, and each (row, level) holds one sparse-recovery cell. A
/// sample is the key of the deepest recoverable level of the first
/// successful row, which is near-uniform over the support.
class L0Sampler {
 public:
  L0Sampler() = default;
  L0Sampler(size_t key_width, double delta, uint64_t seed, uint32_t levels = 24);

  size_t key_width() const { return key_width_; }
  uint32_t rows() const { return rows_; }
  uint32_t levels() const { return levels_; }

  void update(std::span<const uint64_t> key_words, int64_t delta);

  /// kEmpty when the net vector is zero (exact for nonnegative
  /// multiplicities), kFail with probability <= delta otherwise.
  SampleResult sample() const;

  uint64_t state_words() const;

  static uint32_t row_count(double delta);

 private:
  RecoveryCell& cell(uint32_t row, uint32_t level) { return cells_[row * levels_ + level]; }
  const RecoveryCell& cell(uint32_t row, uint32_t level) const {
    return cells_[row * levels_ + level];
  }
  std::span<uint64_t> sums(uint32_t row, uint32_t level) {
    return {sums_.data() + (row * levels_ + level) * key_width_, key_width_};
  }
  std::span<const uint64_t> sums(uint32_t row, uint32_t level) const {
    return {sums_.data() + (row * levels_ + level) * key_width_, key_width_};
  }

  size_t key_width_ = 0;
  uint32_t rows_ = 0;
  uint32_t levels_ = 0;
  uint64_t seed_ = 0;
  uint64_t fp_seed_ = 0;
  double delta_ = 0;
  std::vector<KWiseHash> level_hashes_;
  std::vector<RecoveryCell> cells_;
  std::vector<uint64_t> sums_;

  friend class SketchCodec;
};

}  // namespace covstream
