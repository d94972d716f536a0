#pragma once

#include <cstdint>
#include <vector>

#include "covstream/instance.hpp"

namespace covstream {

enum class Objective : uint8_t { kMaxCoverage, kUniqueCoverage };

inline const char* objective_name(Objective o) {
  return o == Objective::kMaxCoverage ? "mc" : "uc";
}

struct Solution {
  Objective objective = Objective::kMaxCoverage;
  uint64_t value = 0;
  std::vector<int64_t> set_ids;  // sorted ascending
};

inline constexpr double kDefaultEnumerationBudget = 1e7;

/// Number of nonempty subcollections of size <= k out of m sets, clamped.
double enumeration_count(uint32_t m, uint32_t k);

/// Exhaustive optimum over `sets` (each of size <= k chosen). Unique coverage
/// is non-monotone, so every size 0..k is tried; the same enumeration order
/// is used for max coverage (the optimum value is unaffected by also scoring
/// smaller collections). Ties between equal-value optima resolve to the
/// lexicographically smallest id vector. Throws BudgetError when the
/// enumeration count exceeds the budget.
Solution oracle_solve_records(const std::vector<SetRecord>& sets, uint32_t n, uint32_t k,
                              Objective objective,
                              double budget = kDefaultEnumerationBudget);

/// oracle_solve over the instance's live sets.
Solution oracle_solve(const SetSystemInstance& inst, uint32_t k, Objective objective,
                      double budget = kDefaultEnumerationBudget);

}  // namespace covstream
