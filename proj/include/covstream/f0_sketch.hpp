#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "covstream/hashing.hpp"

namespace covstream {

struct F0Params {
  double epsilon = 0.1;
  double delta = 0.01;
  uint64_t seed = 0;

  bool operator==(const F0Params&) const = default;
};

/// Mergeable distinct-count sketch: per repetition, the t smallest distinct
/// hash values of the items seen (t = ceil(24/eps^2)); the estimate is the
/// median over ceil(4 ln 1/delta) repetitions of the classic bottom-t
/// order-statistic estimator. Keeping explicit bottom-t value sets makes
/// merge exact under union: commutative, associative, and idempotent on the
/// sketch state itself.
class F0Sketch {
 public:
  F0Sketch() = default;
  F0Sketch(F0Params params);

  static uint32_t bucket_count(double epsilon);
  static uint32_t repetition_count(double delta);

  const F0Params& params() const { return params_; }
  uint32_t buckets() const { return t_; }
  uint32_t repetitions() const { return reps_; }

  void add(uint64_t element);

  /// Exact state union, truncated to the t smallest per repetition.
  /// Throws ValidationError when (epsilon, delta, seed) differ.
  void merge(const F0Sketch& other);

  uint64_t estimate() const;

  /// Stored machine words across all repetitions (for space accounting and
  /// the word-count bound asserted in tests).
  uint64_t state_words() const;

  bool operator==(const F0Sketch& other) const {
    return params_ == other.params_ && reps_values_ == other.reps_values_;
  }

  const std::vector<std::set<uint64_t>>& repetition_values() const { return reps_values_; }

 private:
  F0Params params_;
  uint32_t t_ = 0;
  uint32_t reps_ = 0;
  std::vector<KWiseHash> hashes_;
  std::vector<std::set<uint64_t>> reps_values_;

  friend class SketchCodec;
};

/// (1 +/- eps) estimate of |S1 u ... u St| from compatible per-set sketches.
uint64_t f0_union_estimate(const std::vector<const F0Sketch*>& sketches);

}  // namespace covstream
