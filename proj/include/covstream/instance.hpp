#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covstream/stream.hpp"

namespace covstream {

struct InstanceParams {
  uint32_t d = 0;  // max live-set cardinality (0 when no live sets)
  uint32_t r = 0;  // max element multiplicity over live sets
  uint32_t m = 0;  // live-set count at stream end
};

/// Immutable set-system instance: the universe size, the validated event
/// stream, and the live sets at stream end. Every delete must match a prior
/// un-deleted insert with the same id and elements, and live ids are unique.
class SetSystemInstance {
 public:
  SetSystemInstance(uint32_t n, uint32_t k, std::vector<StreamEvent> events);

  static SetSystemInstance from_parsed(ParsedStream parsed) {
    return SetSystemInstance(parsed.n, parsed.k, std::move(parsed.events));
  }
  static SetSystemInstance from_file(const std::string& path) {
    return from_parsed(parse_setstream_file(path));
  }

  uint32_t n() const { return n_; }
  uint32_t k() const { return k_; }
  const std::vector<StreamEvent>& events() const { return events_; }

  /// Live sets at stream end, sorted by id.
  const std::vector<SetRecord>& live_sets() const { return live_; }
  const InstanceParams& params() const { return params_; }

  bool insertion_only() const { return insertion_only_; }

  /// Live set by id; throws LookupError for unknown ids.
  const SetRecord& live_by_id(int64_t id) const;

 private:
  uint32_t n_;
  uint32_t k_;
  std::vector<StreamEvent> events_;
  std::vector<SetRecord> live_;
  InstanceParams params_;
  bool insertion_only_ = true;
};

/// Recomputes (d, r, m) for an arbitrary live collection.
InstanceParams compute_params(uint32_t n, const std::vector<SetRecord>& live_sets);

/// |union of the chosen sets' elements|. ids must reference live sets.
uint64_t coverage(const SetSystemInstance& inst, const std::vector<int64_t>& ids);

/// Count of elements covered by exactly one chosen set.
uint64_t unique_coverage(const SetSystemInstance& inst, const std::vector<int64_t>& ids);

/// Evaluation over an explicit record collection (used by kernels whose
/// stored sets are not instance members).
uint64_t coverage_of(uint32_t n, const std::vector<const SetRecord*>& sets);
uint64_t unique_coverage_of(uint32_t n, const std::vector<const SetRecord*>& sets);

}  // namespace covstream
