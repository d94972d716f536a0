#include "covstream/f0_sketch.hpp"

#include <algorithm>
#include <cmath>

#include "covstream/errors.hpp"
#include "covstream/rng.hpp"

namespace covstream {

uint32_t F0Sketch::bucket_count(double epsilon) {
  return static_cast<uint32_t>(std::ceil(24.0 / (epsilon * epsilon)));
}

uint32_t F0Sketch::repetition_count(double delta) {
  return std::max<uint32_t>(1, static_cast<uint32_t>(std::ceil(4.0 * std::log(1.0 / delta))));
}

F0Sketch::F0Sketch(F0Params params) : params_(params) {
  if (!(params_.epsilon > 0.0 && params_.epsilon < 1.0))
    throw ValidationError("f0 sketch: epsilon must be in (0,1)");
  if (!(params_.delta > 0.0 && params_.delta < 1.0))
    throw ValidationError("f0 sketch: delta must be in (0,1)");
  t_ = bucket_count(params_.epsilon);
  reps_ = repetition_count(params_.delta);
  hashes_.reserve(reps_);
  for (uint32_t j = 0; j < reps_; ++j)
    hashes_.emplace_back(2, derive_seed(params_.seed, seed_tag::kF0Rep, j));
  reps_values_.resize(reps_);
}

void F0Sketch::add(uint64_t element) {
  for (uint32_t j = 0; j < reps_; ++j) {
    const uint64_t hv = hashes_[j].eval(element);
    auto& kept = reps_values_[j];
    if (kept.size() < t_) {
      kept.insert(hv);
    } else if (hv < *kept.rbegin()) {
      if (kept.insert(hv).second) kept.erase(std::prev(kept.end()));
    }
  }
}

void F0Sketch::merge(const F0Sketch& other) {
  if (!(params_ == other.params_))
    throw ValidationError("f0 merge: sketches have incompatible (epsilon, delta, seed)");
  for (uint32_t j = 0; j < reps_; ++j) {
    auto& kept = reps_values_[j];
    for (uint64_t hv : other.reps_values_[j]) {
      if (kept.size() < t_) {
        kept.insert(hv);
      } else if (hv < *kept.rbegin()) {
        if (kept.insert(hv).second) kept.erase(std::prev(kept.end()));
      }
    }
  }
}

uint64_t F0Sketch::estimate() const {
  if (reps_ == 0) return 0;
  std::vector<double> per_rep;
  per_rep.reserve(reps_);
  for (const auto& kept : reps_values_) {
    if (kept.size() < t_) {
      per_rep.push_back(static_cast<double>(kept.size()));
    } else {
      // (t-1)/u where u is the t-th smallest hash normalized to (0,1].
      const double u = (static_cast<double>(*kept.rbegin()) + 1.0) /
                       static_cast<double>(field::kPrime);
      per_rep.push_back(static_cast<double>(t_ - 1) / u);
    }
  }
  std::sort(per_rep.begin(), per_rep.end());
  const size_t mid = per_rep.size() / 2;
  const double median = (per_rep.size() % 2 == 1)
                            ? per_rep[mid]
                            : 0.5 * (per_rep[mid - 1] + per_rep[mid]);
  return static_cast<uint64_t>(std::llround(median));
}

uint64_t F0Sketch::state_words() const {
  uint64_t words = 0;
  for (const auto& kept : reps_values_) words += kept.size();
  return words;
}

uint64_t f0_union_estimate(const std::vector<const F0Sketch*>& sketches) {
  if (sketches.empty()) return 0;
  F0Sketch merged = *sketches.front();
  for (size_t i = 1; i < sketches.size(); ++i) merged.merge(*sketches[i]);
  return merged.estimate();
}

}  // namespace covstream
