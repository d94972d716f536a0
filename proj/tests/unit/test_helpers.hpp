#pragma once

#include <cstdint>
#include <vector>

#include "covstream/instance.hpp"
#include "covstream/oracle.hpp"
#include "covstream/rng.hpp"
#include "covstream/stream.hpp"

namespace covtest {

using covstream::Objective;
using covstream::ParsedStream;
using covstream::SetRecord;
using covstream::SetSystemInstance;
using covstream::StreamEvent;
using covstream::StreamOp;

inline StreamEvent ins(int64_t id, std::vector<uint32_t> elements) {
  return StreamEvent{StreamOp::kInsert, SetRecord{id, std::move(elements)}};
}

inline StreamEvent del(int64_t id, std::vector<uint32_t> elements) {
  return StreamEvent{StreamOp::kDelete, SetRecord{id, std::move(elements)}};
}

inline SetSystemInstance make_instance(uint32_t n, uint32_t k,
                                       std::vector<StreamEvent> events) {
  return SetSystemInstance(n, k, std::move(events));
}

/// Independent brute-force optimum used to pin oracle expectations. Walks
/// subset bitmasks directly and counts multiplicities per element; shares no
/// code with the oracle's recursive enumerator.
inline uint64_t bitmask_optimum(const std::vector<SetRecord>& sets, uint32_t n, uint32_t k,
                                Objective objective) {
  const size_t m = sets.size();
  uint64_t best = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    if (static_cast<uint32_t>(__builtin_popcountll(mask)) > k) continue;
    std::vector<uint32_t> mult(n, 0);
    for (size_t i = 0; i < m; ++i)
      if (mask & (uint64_t{1} << i))
        for (uint32_t e : sets[i].elements) ++mult[e];
    uint64_t value = 0;
    for (uint32_t e = 0; e < n; ++e) {
      if (objective == Objective::kUniqueCoverage)
        value += (mult[e] == 1);
      else
        value += (mult[e] >= 1);
    }
    best = std::max(best, value);
  }
  return best;
}

/// Random insertion-only instance with n <= n_max, m <= m_max, sizes <= d_max.
inline SetSystemInstance random_bounded_d_instance(uint64_t seed, uint32_t n_max, uint32_t m_max,
                                                   uint32_t d_max, uint32_t k) {
  covstream::Rng rng(seed);
  const uint32_t n = static_cast<uint32_t>(rng.range(d_max, n_max));
  const uint32_t m = static_cast<uint32_t>(rng.range(1, m_max));
  std::vector<StreamEvent> events;
  for (uint32_t i = 0; i < m; ++i) {
    const uint32_t size = static_cast<uint32_t>(rng.range(1, std::min(d_max, n)));
    std::vector<uint32_t> pool(n);
    for (uint32_t e = 0; e < n; ++e) pool[e] = e;
    rng.shuffle(std::span<uint32_t>(pool));
    std::vector<uint32_t> elems(pool.begin(), pool.begin() + size);
    std::sort(elems.begin(), elems.end());
    events.push_back(ins(i, std::move(elems)));
  }
  return make_instance(n, k, std::move(events));
}

}  // namespace covtest
