#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "covstream/errors.hpp"
#include "covstream/stream.hpp"

namespace covstream {

/// Canonical fixed-width encoding of (id, elements) into 64-bit words, used
/// as the coordinate payload of linear sketches so that deleting a set
/// cancels its insertion exactly. Layout: [id][size][elements packed two
/// 32-bit values per word][zero padding]. Injective by construction (the
/// encoding is the content).
class SetCodec {
 public:
  explicit SetCodec(uint32_t max_set_size)
      : max_set_size_(max_set_size), width_(2 + (max_set_size + 1) / 2) {
    if (max_set_size == 0) throw ValidationError("set codec: max set size must be >= 1");
  }

  uint32_t max_set_size() const { return max_set_size_; }
  size_t width() const { return width_; }

  std::vector<uint64_t> encode(const SetRecord& rec) const {
    if (rec.elements.size() > max_set_size_)
      throw ValidationError("set codec: set of size " + std::to_string(rec.elements.size()) +
                            " exceeds encoder cap " + std::to_string(max_set_size_));
    std::vector<uint64_t> words(width_, 0);
    words[0] = static_cast<uint64_t>(rec.id);
    words[1] = rec.elements.size();
    for (size_t i = 0; i < rec.elements.size(); ++i) {
      const size_t w = 2 + i / 2;
      const uint32_t shift = (i % 2) * 32;
      words[w] |= static_cast<uint64_t>(rec.elements[i]) << shift;
    }
    return words;
  }

  /// Structural validation doubles as the post-recovery sanity check:
  /// garbage words fail to decode.
  std::optional<SetRecord> decode(std::span<const uint64_t> words) const {
    if (words.size() != width_) return std::nullopt;
    const uint64_t size = words[1];
    if (size == 0 || size > max_set_size_) return std::nullopt;
    SetRecord rec;
    rec.id = static_cast<int64_t>(words[0]);
    rec.elements.reserve(size);
    for (size_t i = 0; i < size; ++i) {
      const size_t w = 2 + i / 2;
      const uint32_t shift = (i % 2) * 32;
      const uint32_t e = static_cast<uint32_t>(words[w] >> shift);
      if (!rec.elements.empty() && e <= rec.elements.back()) return std::nullopt;
      rec.elements.push_back(e);
    }
    // Padding beyond the last element must be zero.
    for (size_t i = size; i < max_set_size_; ++i) {
      const size_t w = 2 + i / 2;
      const uint32_t shift = (i % 2) * 32;
      if (((words[w] >> shift) & 0xffffffffULL) != 0) return std::nullopt;
    }
    return rec;
  }

 private:
  uint32_t max_set_size_;
  size_t width_;
};

}  // namespace covstream
