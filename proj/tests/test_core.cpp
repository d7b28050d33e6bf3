// Unit tests for the core value types: bitmask solutions, canonical solution
// sets, enumeration budgets, the deterministic rng, and the error hierarchy.
#include <vector>

#include "doctest.h"
#include "sspforge/core.hpp"

using namespace sspforge;

TEST_CASE("solution bit operations") {
  Solution s(10);
  CHECK(s.universe_size() == 10);
  CHECK(s.count() == 0);
  CHECK(s.empty());
  s.set(3);
  s.set(7);
  CHECK(s.test(3));
  CHECK_FALSE(s.test(4));
  CHECK(s.count() == 2);
  CHECK_FALSE(s.empty());
  s.set(3, false);
  CHECK_FALSE(s.test(3));
  CHECK(s.indices() == std::vector<std::uint32_t>{7});

  Solution t = Solution::from_indices(10, {1, 7, 9});
  CHECK(t.count() == 3);
  CHECK(t.test(1));
  CHECK(t.test(9));
  CHECK(t.indices() == std::vector<std::uint32_t>{1, 7, 9});
}

TEST_CASE("solution index bounds are checked") {
  Solution s(4);
  CHECK_THROWS_AS(s.set(4), SspError);
  CHECK_THROWS_AS((void)s.test(100), SspError);
  try {
    s.set(9);
  } catch (const SspError& e) {
    CHECK(e.code() == ErrorCode::internal_error);
  }
}

TEST_CASE("solution set algebra") {
  Solution a = Solution::from_indices(6, {0, 1, 4});
  Solution b = Solution::from_indices(6, {1, 4, 5});
  CHECK(a.intersect(b).indices() == std::vector<std::uint32_t>{1, 4});
  CHECK(a.unite(b).indices() == std::vector<std::uint32_t>{0, 1, 4, 5});
  CHECK(a.subtract(b).indices() == std::vector<std::uint32_t>{0});
  CHECK(a.intersect(b).subset_of(a));
  CHECK_FALSE(a.subset_of(b));
  CHECK(Solution(6).subset_of(a));  // empty set is a subset of everything
  CHECK(a != b);
  CHECK(a == Solution::from_indices(6, {4, 1, 0}));
}

TEST_CASE("solution order is cardinality first, then lexicographic") {
  Solution single = Solution::from_indices(5, {4});
  Solution ab = Solution::from_indices(5, {0, 1});
  Solution ac = Solution::from_indices(5, {0, 2});
  CHECK(single < ab);  // smaller solutions first, regardless of indices
  CHECK(ab < ac);      // equal size: lexicographic by element index
  CHECK_FALSE(ac < ab);
  CHECK_FALSE(ab < ab);
}

TEST_CASE("solution sets keep canonical order and drop duplicates") {
  SolutionSet set;
  Solution big = Solution::from_indices(4, {2, 3});
  Solution small = Solution::from_indices(4, {1});
  set.insert(big);
  set.insert(small);
  set.insert(big);
  REQUIRE(set.size() == 2);
  CHECK(set.items[0] == small);
  CHECK(set.items[1] == big);
  CHECK(set.contains(big));
  CHECK_FALSE(set.contains(Solution(4)));

  SolutionSet again;
  again.insert(small);
  again.insert(big);
  CHECK(solution_equal_sets(set, again));
  again.insert(Solution(4));
  CHECK_FALSE(solution_equal_sets(set, again));
}

TEST_CASE("budget throws once exhausted") {
  Budget b(10);
  b.tick(10);
  CHECK(b.used() == 10);
  CHECK(b.limit() == 10);
  try {
    b.tick();
    FAIL("budget should have thrown");
  } catch (const SspError& e) {
    CHECK(e.code() == ErrorCode::budget_exceeded);
  }
}

TEST_CASE("rng is deterministic, unbiased in range, and guards zero bounds") {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());

  Rng c(7);
  for (int i = 0; i < 200; ++i) {
    CHECK(c.below(13) < 13);
    std::int64_t r = c.range(-3, 3);
    CHECK(r >= -3);
    CHECK(r <= 3);
  }
  CHECK_FALSE(c.chance(0));
  CHECK(c.chance(100));
  CHECK_THROWS_AS((void)c.below(0), SspError);
}
