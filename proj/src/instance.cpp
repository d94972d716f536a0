#include "covstream/instance.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "covstream/errors.hpp"

namespace covstream {

SetSystemInstance::SetSystemInstance(uint32_t n, uint32_t k, std::vector<StreamEvent> events)
    : n_(n), k_(k), events_(std::move(events)) {
  if (k_ < 1) throw ValidationError("instance: k must be >= 1");
  std::map<int64_t, const SetRecord*> live;
  for (size_t i = 0; i < events_.size(); ++i) {
    const auto& ev = events_[i];
    validate_record(ev.set, n_, "event " + std::to_string(i));
    if (ev.op == StreamOp::kInsert) {
      auto [it, inserted] = live.emplace(ev.set.id, &ev.set);
      if (!inserted)
        throw ValidationError("event " + std::to_string(i) + ": insert of id " +
                              std::to_string(ev.set.id) + " while the same id is live");
    } else {
      insertion_only_ = false;
      auto it = live.find(ev.set.id);
      if (it == live.end() || it->second->elements != ev.set.elements)
        throw ValidationError("event " + std::to_string(i) +
                              ": delete without a matching un-deleted insert (id " +
                              std::to_string(ev.set.id) + ")");
      live.erase(it);
    }
  }
  live_.reserve(live.size());
  for (const auto& [id, rec] : live) live_.push_back(*rec);
  params_ = compute_params(n_, live_);
}

const SetRecord& SetSystemInstance::live_by_id(int64_t id) const {
  auto it = std::lower_bound(live_.begin(), live_.end(), id,
                             [](const SetRecord& r, int64_t v) { return r.id < v; });
  if (it == live_.end() || it->id != id)
    throw LookupError("unknown set id: " + std::to_string(id));
  return *it;
}

InstanceParams compute_params(uint32_t n, const std::vector<SetRecord>& live_sets) {
  InstanceParams p;
  p.m = static_cast<uint32_t>(live_sets.size());
  std::vector<uint32_t> multiplicity(n, 0);
  for (const auto& rec : live_sets) {
    p.d = std::max(p.d, rec.size());
    for (uint32_t e : rec.elements) {
      ++multiplicity[e];
      p.r = std::max(p.r, multiplicity[e]);
    }
  }
  return p;
}

namespace {

uint64_t eval_collection(uint32_t n, const std::vector<const SetRecord*>& sets, bool unique) {
  // Element-wise multiplicity walk; chosen collections are small.
  std::vector<uint8_t> mult(n, 0);
  for (const auto* rec : sets)
    for (uint32_t e : rec->elements)
      if (mult[e] < 2) ++mult[e];
  uint64_t count = 0;
  if (unique) {
    for (uint32_t e = 0; e < n; ++e) count += (mult[e] == 1);
  } else {
    for (uint32_t e = 0; e < n; ++e) count += (mult[e] >= 1);
  }
  return count;
}

std::vector<const SetRecord*> resolve_ids(const SetSystemInstance& inst,
                                          const std::vector<int64_t>& ids) {
  std::vector<const SetRecord*> out;
  out.reserve(ids.size());
  for (int64_t id : ids) out.push_back(&inst.live_by_id(id));
  return out;
}

}  // namespace

uint64_t coverage(const SetSystemInstance& inst, const std::vector<int64_t>& ids) {
  return eval_collection(inst.n(), resolve_ids(inst, ids), /*unique=*/false);
}

uint64_t unique_coverage(const SetSystemInstance& inst, const std::vector<int64_t>& ids) {
  return eval_collection(inst.n(), resolve_ids(inst, ids), /*unique=*/true);
}

uint64_t coverage_of(uint32_t n, const std::vector<const SetRecord*>& sets) {
  return eval_collection(n, sets, /*unique=*/false);
}

uint64_t unique_coverage_of(uint32_t n, const std::vector<const SetRecord*>& sets) {
  return eval_collection(n, sets, /*unique=*/true);
}

}  // namespace covstream
