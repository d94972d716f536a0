#include <sstream>

#include "covstream/errors.hpp"
#include "covstream/instance.hpp"
#include "covstream/oracle.hpp"
#include "covstream/stream.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace covstream;
using namespace covtest;

TEST_CASE("compute_params on live sets") {
  SUBCASE("mixed overlap") {
    auto inst = make_instance(4, 2, {ins(0, {1, 2}), ins(1, {2, 3}), ins(2, {2})});
    CHECK(inst.params().d == 2);
    CHECK(inst.params().r == 3);
    CHECK(inst.params().m == 3);
  }
  SUBCASE("insert then delete leaves the empty convention") {
    auto inst = make_instance(4, 2, {ins(0, {1, 2}), del(0, {1, 2})});
    CHECK(inst.params().d == 0);
    CHECK(inst.params().r == 0);
    CHECK(inst.params().m == 0);
  }
  SUBCASE("pairwise-disjoint singletons") {
    std::vector<StreamEvent> events;
    for (uint32_t i = 0; i < 5; ++i) events.push_back(ins(i, {i}));
    auto inst = make_instance(5, 2, std::move(events));
    CHECK(inst.params().d == 1);
    CHECK(inst.params().r == 1);
    CHECK(inst.params().m == 5);
  }
  SUBCASE("delete without matching insert names the event index") {
    CHECK_THROWS_WITH_AS(make_instance(4, 2, {ins(0, {1}), del(3, {1})}),
                         doctest::Contains("event 1"), ValidationError);
  }
  SUBCASE("delete with different elements is rejected") {
    CHECK_THROWS_AS(make_instance(4, 2, {ins(0, {1, 2}), del(0, {1})}), ValidationError);
  }
  SUBCASE("invariant under reordering that preserves the live multiset") {
    auto a = make_instance(6, 2, {ins(0, {1, 2}), ins(1, {3}), ins(2, {4, 5}), del(1, {3})});
    auto b = make_instance(6, 2, {ins(2, {4, 5}), ins(0, {1, 2})});
    CHECK(a.params().d == b.params().d);
    CHECK(a.params().r == b.params().r);
    CHECK(a.params().m == b.params().m);
  }
}

TEST_CASE("coverage and unique coverage evaluation") {
  auto inst = make_instance(4, 2, {ins(0, {1, 2}), ins(1, {2, 3}), ins(2, {1, 2})});
  SUBCASE("union") { CHECK(coverage(inst, {0, 1}) == 3); }
  SUBCASE("empty collection") { CHECK(coverage(inst, {}) == 0); }
  SUBCASE("duplicate sets under distinct ids") { CHECK(coverage(inst, {0, 2}) == 2); }
  SUBCASE("unique: hand count") { CHECK(unique_coverage(inst, {0, 1}) == 2); }
  SUBCASE("unique: all multiplicity two") { CHECK(unique_coverage(inst, {0, 2}) == 0); }
  SUBCASE("unique: singleton collection") {
    auto single = make_instance(4, 1, {ins(0, {1, 2, 3})});
    CHECK(unique_coverage(single, {0}) == 3);
  }
  SUBCASE("unknown id") { CHECK_THROWS_AS(coverage(inst, {9}), LookupError); }
  SUBCASE("uc <= mc <= sum of sizes") {
    CHECK(unique_coverage(inst, {0, 1, 2}) <= coverage(inst, {0, 1, 2}));
    CHECK(coverage(inst, {0, 1, 2}) <= 6);
  }
}

TEST_CASE("unique coverage is non-monotone under adding a set") {
  auto inst = make_instance(3, 2, {ins(0, {1, 2}), ins(1, {1, 2})});
  CHECK(unique_coverage(inst, {0}) == 2);
  CHECK(unique_coverage(inst, {0, 1}) == 0);
  CHECK(coverage(inst, {0, 1}) >= coverage(inst, {0}));
}

TEST_CASE("oracle solves hand examples") {
  auto inst = make_instance(5, 2, {ins(1, {1, 2}), ins(2, {3, 4}), ins(3, {1, 3})});
  SUBCASE("mc picks the disjoint pair") {
    auto sol = oracle_solve(inst, 2, Objective::kMaxCoverage);
    CHECK(sol.value == 4);
    CHECK(sol.set_ids == std::vector<int64_t>{1, 2});
  }
  SUBCASE("uc agrees on the disjoint pair") {
    auto sol = oracle_solve(inst, 2, Objective::kUniqueCoverage);
    CHECK(sol.value == 4);
    CHECK(sol.set_ids == std::vector<int64_t>{1, 2});
  }
}

TEST_CASE("oracle uc triangle: taking all three sets is worse than one") {
  // {1,2},{2,3},{1,3}: every pair overlaps, all three uniquely cover nothing.
  std::vector<SetRecord> sets = {{0, {1, 2}}, {1, {2, 3}}, {2, {1, 3}}};
  auto inst = make_instance(4, 3, {ins(0, {1, 2}), ins(1, {2, 3}), ins(2, {1, 3})});

  // Frozen expectation from the independent bitmask enumerator.
  const uint64_t expected = bitmask_optimum(sets, 4, 3, Objective::kUniqueCoverage);
  CHECK(expected == 2);

  auto sol = oracle_solve(inst, 3, Objective::kUniqueCoverage);
  CHECK(sol.value == expected);
  CHECK(sol.set_ids.size() == 1);
  CHECK(unique_coverage(inst, {0, 1, 2}) == 0);
}

TEST_CASE("oracle matches the independent bitmask enumerator on random instances") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    auto inst = random_bounded_d_instance(seed + 1000, 12, 10, 4, 3);
    for (Objective obj : {Objective::kMaxCoverage, Objective::kUniqueCoverage}) {
      auto sol = oracle_solve(inst, inst.k(), obj);
      CHECK(sol.value == bitmask_optimum(inst.live_sets(), inst.n(), inst.k(), obj));
      // The reported ids must re-evaluate to the claimed value.
      const uint64_t re = obj == Objective::kMaxCoverage ? coverage(inst, sol.set_ids)
                                                         : unique_coverage(inst, sol.set_ids);
      CHECK(re == sol.value);
    }
  }
}

TEST_CASE("oracle value is monotone nondecreasing in k") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = random_bounded_d_instance(seed + 77, 14, 9, 4, 1);
    for (Objective obj : {Objective::kMaxCoverage, Objective::kUniqueCoverage}) {
      uint64_t prev = 0;
      for (uint32_t k = 1; k <= 4; ++k) {
        auto sol = oracle_solve(inst, k, obj);
        CHECK(sol.value >= prev);
        prev = sol.value;
      }
    }
  }
}

TEST_CASE("oracle refuses over-budget enumerations with the computed count") {
  std::vector<StreamEvent> events;
  for (uint32_t i = 0; i < 60; ++i) events.push_back(ins(i, {i % 8}));
  auto inst = make_instance(8, 5, std::move(events));
  try {
    (void)oracle_solve(inst, 5, Objective::kMaxCoverage, 1000.0);
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    CHECK(e.combinations() == doctest::Approx(enumeration_count(60, 5)));
  }
}

TEST_CASE("setstream parse and write round-trip") {
  const std::string text =
      "# demo stream\n"
      "SETSTREAM v1 n=6 k=2\n"
      "+ 0 1 2\n"
      "+ 1 3 4 5\n"
      "- 0 1 2\n";
  std::istringstream in(text);
  auto parsed = parse_setstream(in);
  CHECK(parsed.n == 6);
  CHECK(parsed.k == 2);
  REQUIRE(parsed.events.size() == 3);
  CHECK(parsed.events[2].op == StreamOp::kDelete);

  std::ostringstream out;
  write_setstream(out, parsed, "demo stream");
  std::istringstream in2(out.str());
  auto reparsed = parse_setstream(in2);
  CHECK(reparsed.n == parsed.n);
  CHECK(reparsed.events.size() == parsed.events.size());
  CHECK(reparsed.events[1].set.elements == parsed.events[1].set.elements);
}

TEST_CASE("setstream parse rejections") {
  auto expect_reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_setstream(in), ValidationError);
  };
  expect_reject("+ 0 1 2\n");                               // missing header
  expect_reject("SETSTREAM v1 n=4 k=2\n+ 0\n");             // empty set
  expect_reject("SETSTREAM v1 n=4 k=2\n+ 0 2 1\n");         // unsorted
  expect_reject("SETSTREAM v1 n=4 k=2\n+ 0 1 1\n");         // duplicate element
  expect_reject("SETSTREAM v1 n=4 k=2\n+ 0 9\n");           // out of range
  expect_reject("SETSTREAM v1 n=4 k=2\n? 0 1\n");           // bad op
  expect_reject("SETSTREAM v1 n=4 k=0\n");                  // k < 1
}
