#include "covstream/oracle.hpp"

#include <algorithm>
#include <string>

#include "covstream/bitops.hpp"
#include "covstream/bitset.hpp"
#include "covstream/errors.hpp"

namespace covstream {

double enumeration_count(uint32_t m, uint32_t k) {
  double total = 0;
  double binom = 1;
  const uint32_t top = std::min(m, k);
  for (uint32_t s = 1; s <= top; ++s) {
    binom *= static_cast<double>(m - s + 1) / static_cast<double>(s);
    total += binom;
    if (total > 1e18) return 1e18;
  }
  return total;
}

namespace {

// Depth-first enumeration over index combinations in lexicographic order.
// Because candidates are sorted by id and only strict improvements replace
// the incumbent, the returned optimum carries the lexicographically smallest
// id vector among maximizers (the empty collection, value 0, seeds the
// incumbent).
class Enumerator {
 public:
  Enumerator(const std::vector<DenseBitset>& bitsets, uint32_t k, Objective objective)
      : bitsets_(bitsets), k_(k), objective_(objective) {
    const size_t words = bitsets_.empty() ? 0 : bitsets_[0].word_count();
    once_.assign(k_ + 1, std::vector<uint64_t>(words, 0));
    if (objective_ == Objective::kUniqueCoverage)
      multi_.assign(k_ + 1, std::vector<uint64_t>(words, 0));
    path_.reserve(k_);
  }

  void run() { descend(0, 0); }

  uint64_t best_value() const { return best_value_; }
  const std::vector<size_t>& best_indices() const { return best_indices_; }

 private:
  void descend(size_t first, uint32_t depth) {
    if (depth == k_) return;
    const auto& kern = bitops::active();
    const size_t words = once_[depth].size();
    for (size_t i = first; i < bitsets_.size(); ++i) {
      const uint64_t* src = bitsets_[i].data();
      uint64_t value;
      if (objective_ == Objective::kMaxCoverage) {
        value = kern.or_popcount(once_[depth].data(), src, words);
      } else {
        value = kern.unique_after_add_popcount(once_[depth].data(), multi_[depth].data(), src,
                                               words);
      }
      path_.push_back(i);
      if (value > best_value_) {
        best_value_ = value;
        best_indices_ = path_;
      }
      if (depth + 1 < k_ && i + 1 < bitsets_.size()) {
        // Materialize the child accumulator one level down.
        std::copy(once_[depth].begin(), once_[depth].end(), once_[depth + 1].begin());
        if (objective_ == Objective::kUniqueCoverage) {
          std::copy(multi_[depth].begin(), multi_[depth].end(), multi_[depth + 1].begin());
          kern.once_multi_accumulate(once_[depth + 1].data(), multi_[depth + 1].data(), src,
                                     words);
        } else {
          kern.or_inplace(once_[depth + 1].data(), src, words);
        }
        descend(i + 1, depth + 1);
      }
      path_.pop_back();
    }
  }

  const std::vector<DenseBitset>& bitsets_;
  uint32_t k_;
  Objective objective_;
  std::vector<std::vector<uint64_t>> once_;
  std::vector<std::vector<uint64_t>> multi_;
  std::vector<size_t> path_;
  uint64_t best_value_ = 0;
  std::vector<size_t> best_indices_;
};

}  // namespace

Solution oracle_solve_records(const std::vector<SetRecord>& sets, uint32_t n, uint32_t k,
                              Objective objective, double budget) {
  const uint32_t m = static_cast<uint32_t>(sets.size());
  const double count = enumeration_count(m, k);
  if (count > budget)
    throw BudgetError("oracle enumeration needs " + std::to_string(count) +
                          " combinations, budget is " + std::to_string(budget),
                      count);

  std::vector<SetRecord> ordered = sets;
  std::sort(ordered.begin(), ordered.end(),
            [](const SetRecord& a, const SetRecord& b) { return a.id < b.id; });

  std::vector<DenseBitset> bitsets;
  bitsets.reserve(ordered.size());
  for (const auto& rec : ordered) bitsets.push_back(DenseBitset::of_elements(n, rec.elements));

  Enumerator en(bitsets, std::min(k, m), objective);
  if (!bitsets.empty() && k > 0) en.run();

  Solution sol;
  sol.objective = objective;
  sol.value = en.best_value();
  sol.set_ids.reserve(en.best_indices().size());
  for (size_t idx : en.best_indices()) sol.set_ids.push_back(ordered[idx].id);
  return sol;
}

Solution oracle_solve(const SetSystemInstance& inst, uint32_t k, Objective objective,
                      double budget) {
  return oracle_solve_records(inst.live_sets(), inst.n(), k, objective, budget);
}

}  // namespace covstream
