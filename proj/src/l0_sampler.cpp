#include "covstream/l0_sampler.hpp"

#include <bit>
#include <cmath>

#include "covstream/errors.hpp"
#include "covstream/rng.hpp"

namespace covstream {

uint32_t L0Sampler::row_count(double delta) {
  // Per-row success is at least ~1/4 at the level whose retention rate
  // brackets the support size; rows amplify to 1 - delta.
  return std::max<uint32_t>(2, static_cast<uint32_t>(
                                   std::ceil(std::log(1.0 / delta) / std::log(4.0 / 3.0))));
}

L0Sampler::L0Sampler(size_t key_width, double delta, uint64_t seed, uint32_t levels)
    : key_width_(key_width), levels_(levels), seed_(seed), delta_(delta) {
  if (key_width == 0) throw ValidationError("l0 sampler: key width must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("l0 sampler: delta must be in (0,1)");
  rows_ = row_count(delta);
  fp_seed_ = derive_seed(seed, seed_tag::kL0Fingerprint);
  level_hashes_.reserve(rows_);
  for (uint32_t r = 0; r < rows_; ++r)
    level_hashes_.emplace_back(8, derive_seed(seed, seed_tag::kL0Level, r));
  cells_.assign(static_cast<size_t>(rows_) * levels_, RecoveryCell{});
  sums_.assign(static_cast<size_t>(rows_) * levels_ * key_width_, 0);
}

void L0Sampler::update(std::span<const uint64_t> key_words, int64_t delta) {
  if (key_words.size() != key_width_)
    throw ValidationError("l0 sampler: key width mismatch");
  const uint64_t fp = fingerprint_words(key_words, fp_seed_);
  for (uint32_t r = 0; r < rows_; ++r) {
    const uint64_t hv = level_hashes_[r].eval(fp);
    const uint32_t depth =
        std::min<uint32_t>(static_cast<uint32_t>(std::countr_zero(hv | (uint64_t{1} << 62))),
                           levels_ - 1);
    for (uint32_t l = 0; l <= depth; ++l)
      cell_apply(cell(r, l), sums(r, l), key_words, fp, delta);
  }
}

SampleResult L0Sampler::sample() const {
  // Level 0 of every row accumulates the whole net vector.
  bool any_nonzero = false;
  for (uint32_t r = 0; r < rows_ && !any_nonzero; ++r)
    any_nonzero = !cell(r, 0).looks_zero(sums(r, 0));
  if (!any_nonzero) return SampleResult{SampleStatus::kEmpty, {}, 0};

  const auto fp_of = [this](std::span<const uint64_t> words) {
    return fingerprint_words(words, fp_seed_);
  };
  for (uint32_t r = 0; r < rows_; ++r) {
    for (uint32_t l = levels_; l-- > 0;) {
      const RecoveryCell& c = cell(r, l);
      if (c.looks_zero(sums(r, l))) continue;
      if (auto got = cell_extract_single(c, sums(r, l), fp_of))
        return SampleResult{SampleStatus::kOk, std::move(got->key_words), got->count};
    }
  }
  return SampleResult{SampleStatus::kFail, {}, 0};
}

uint64_t L0Sampler::state_words() const {
  // count + fp_sum per cell plus the payload sums.
  return cells_.size() * 2 + sums_.size();
}

}  // namespace covstream
