#include "covstream/count_min.hpp"

#include <algorithm>

#include "covstream/errors.hpp"
#include "covstream/rng.hpp"

namespace covstream {

CountMinSketch::CountMinSketch(uint32_t width, uint32_t depth, size_t key_width, uint64_t seed)
    : width_(width), depth_(depth), key_width_(key_width), seed_(seed) {
  if (width == 0 || depth == 0) throw ValidationError("count-min: width and depth must be >= 1");
  if (key_width == 0) throw ValidationError("count-min: key width must be >= 1");
  fp_seed_ = derive_seed(seed, seed_tag::kCmFingerprint);
  row_hashes_.reserve(depth_);
  for (uint32_t r = 0; r < depth_; ++r)
    row_hashes_.emplace_back(2, derive_seed(seed, seed_tag::kCmRow, r));
  cells_.assign(static_cast<size_t>(width_) * depth_, RecoveryCell{});
  sums_.assign(static_cast<size_t>(width_) * depth_ * key_width_, 0);
}

void CountMinSketch::update(std::span<const uint64_t> key_words, int64_t delta) {
  if (key_words.size() != key_width_) throw ValidationError("count-min: key width mismatch");
  const uint64_t fp = fingerprint_words(key_words, fp_seed_);
  for (uint32_t r = 0; r < depth_; ++r) {
    const uint32_t c = column_of(r, fp);
    cell_apply(cells_[cell_index(r, c)], sums(r, c), key_words, fp, delta);
  }
}

int64_t CountMinSketch::point_estimate(std::span<const uint64_t> key_words) const {
  const uint64_t fp = fingerprint_words(key_words, fp_seed_);
  int64_t best = INT64_MAX;
  for (uint32_t r = 0; r < depth_; ++r)
    best = std::min(best, cells_[cell_index(r, column_of(r, fp))].count);
  return best;
}

RecoveryResult CountMinSketch::recover(uint32_t sparsity_hint) const {
  // Peel on a working copy. Each extraction removes one distinct key's full
  // contribution from every row; checksums plus the column cross-check keep
  // bogus extractions out.
  std::vector<RecoveryCell> cells = cells_;
  std::vector<uint64_t> sums = sums_;
  const auto cell_sums = [&](uint32_t r, uint32_t c) {
    return std::span<uint64_t>(sums.data() + cell_index(r, c) * key_width_, key_width_);
  };
  const auto fp_of = [this](std::span<const uint64_t> words) {
    return fingerprint_words(words, fp_seed_);
  };

  RecoveryResult out;
  const uint32_t max_passes = std::max<uint32_t>(8, 2 * (sparsity_hint + depth_ + 2));
  for (uint32_t pass = 0; pass < max_passes; ++pass) {
    bool progressed = false;
    for (uint32_t r = 0; r < depth_; ++r) {
      for (uint32_t c = 0; c < width_; ++c) {
        RecoveryCell& cell = cells[cell_index(r, c)];
        if (cell.looks_zero(cell_sums(r, c))) continue;
        auto got = cell_extract_single(cell, cell_sums(r, c), fp_of);
        if (!got) continue;
        const uint64_t fp = fp_of(got->key_words);
        if (column_of(r, fp) != c) continue;  // division artifact, not a real key
        for (uint32_t rr = 0; rr < depth_; ++rr) {
          const uint32_t cc = column_of(rr, fp);
          cell_apply(cells[cell_index(rr, cc)], cell_sums(rr, cc), got->key_words, fp,
                     -got->count);
        }
        out.entries.push_back(SparseEntry{std::move(got->key_words), got->count});
        progressed = true;
      }
    }
    if (!progressed) break;
  }

  bool residue = false;
  for (uint32_t r = 0; r < depth_ && !residue; ++r)
    for (uint32_t c = 0; c < width_ && !residue; ++c)
      residue = !cells[cell_index(r, c)].looks_zero(cell_sums(r, c));
  out.status = residue ? RecoveryStatus::kFail : RecoveryStatus::kExact;

  std::sort(out.entries.begin(), out.entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.key_words < b.key_words; });
  return out;
}

int64_t CountMinSketch::l1_estimate_row0() const {
  int64_t total = 0;
  for (uint32_t c = 0; c < width_; ++c) total += cells_[cell_index(0, c)].count;
  return total;
}

uint64_t CountMinSketch::state_words() const { return cells_.size() * 2 + sums_.size(); }

bool CountMinSketch::looks_zero() const {
  for (uint32_t r = 0; r < depth_; ++r)
    for (uint32_t c = 0; c < width_; ++c)
      if (!cells_[cell_index(r, c)].looks_zero(sums(r, c))) return false;
  return true;
}

}  // namespace covstream
