#include <doctest.h>

#include "consec/bounds.hpp"
#include "consec/oracle.hpp"

using namespace consec;

TEST_CASE("bounded_range: examples") {
  const auto r16 = bounded_range({16, 3});
  CHECK(r16.first == 5);
  CHECK(r16.last == 7);
  const auto r32 = bounded_range({32, 9});
  CHECK(r32.first == 3);
  CHECK(r32.last == 5);
  CHECK(r32.size() == 3);
  CHECK(bounded_range({16, 5}).empty());
  CHECK(bounded_range({16, 8}).empty());
  CHECK(bounded_range({32, 3}).size() == 14);
}

TEST_CASE("bounded_range is empty whenever 3k >= n") {
  for (std::int64_t n = 1; n <= 100; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      if (3 * k >= n) REQUIRE(bounded_range({n, k}).empty());
    }
  }
}

TEST_CASE("lower_bound / upper_bound: examples") {
  CHECK(lower_bound({16, 3}, 5) == 0);
  CHECK(upper_bound({16, 3}, 5) == 426);
  CHECK(binomial(16, 5) - 6 * binomial(13, 5) + 15 * binomial(10, 5) == 426);
  CHECK(lower_bound({32, 9}, 3) == 0);
  CHECK(binomial(32, 3) - 4 * binomial(23, 3) < 0);
  CHECK(oracle_dp({32, 9}).counts[3] == 20);
  CHECK(upper_bound({16, 3}, 7) == 1072);
  CHECK(oracle_dp({16, 3}).counts[7] == 1016);
  // Unclamped lower bound near the top of the range.
  CHECK(lower_bound({64, 3}, 55) == two_term({64, 3}, 55));
  CHECK(lower_bound({64, 3}, 55) > 0);
}

TEST_CASE("upper_bound clamps at the binomial") {
  bool seen_clamp = false;
  for (std::int64_t n = 1; n <= 64; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      const auto range = bounded_range({n, k});
      for (auto i = range.first; i <= range.last; ++i) {
        const auto u = upper_bound({n, k}, i);
        REQUIRE(u <= binomial(n, i));
        if (three_term({n, k}, i) > binomial(n, i)) {
          seen_clamp = true;
          REQUIRE(u == binomial(n, i));
        }
      }
    }
  }
  CHECK(seen_clamp);
}

TEST_CASE("bounds reject indices with an exact formula") {
  CHECK_THROWS_AS(lower_bound({16, 3}, 4), DomainError);
  CHECK_THROWS_AS(lower_bound({16, 3}, 8), DomainError);
  CHECK_THROWS_AS(upper_bound({16, 8}, 5), DomainError);
  CHECK_THROWS_AS(upper_bound({16, 3}, 17), IndexError);
}

TEST_CASE("bounds_table: applicability and exact fall-through") {
  const auto t = bounds_table({16, 3});
  REQUIRE(t.size() == 17);
  for (const auto& b : t) {
    CHECK(b.applicable == (b.i >= 5 && b.i <= 7));
    if (!b.applicable) {
      CHECK(b.lower == coefficient_exact({16, 3}, b.i));
      CHECK(b.upper == b.lower);
    }
  }
  CHECK(t[5].lower == 0);
  CHECK(t[5].upper == 426);
  for (const auto& b : bounds_table({16, 8})) CHECK_FALSE(b.applicable);
  std::int64_t applicable = 0;
  for (const auto& b : bounds_table({32, 3})) {
    if (b.applicable) {
      ++applicable;
      CHECK(b.i >= 10);
      CHECK(b.i <= 23);
    }
  }
  CHECK(applicable == 14);
}

TEST_CASE("bounded_coefficient_table carries intervals on the bounded range") {
  const auto t = bounded_coefficient_table({16, 3});
  for (const auto& r : t) {
    if (r.i >= 5 && r.i <= 7) {
      REQUIRE(r.interval.has_value());
      CHECK_FALSE(r.value.has_value());
      CHECK(r.interval->lower <= r.interval->upper);
    } else {
      CHECK(r.is_exact());
    }
  }
}

TEST_CASE("envelope: L <= N <= U for n <= 64") {
  for (std::int64_t n = 1; n <= 64; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      const SystemParams p{n, k};
      const auto truth = oracle_dp(p);
      const auto range = bounded_range(p);
      for (auto i = range.first; i <= range.last; ++i) {
        const auto& N = truth.counts[static_cast<std::size_t>(i)];
        REQUIRE(lower_bound(p, i) <= N);
        REQUIRE(N <= upper_bound(p, i));
        REQUIRE(lower_bound(p, i) >= 0);
        // Bonferroni-style bracketing by the truncated alternating sums.
        REQUIRE(inclusion_exclusion(p, i, 1) <= N);
        REQUIRE(N <= inclusion_exclusion(p, i, 2));
      }
    }
  }
}

TEST_CASE("exact-index count for n=32, k=9 is 30 of 33") {
  std::int64_t exact = 0;
  for (const auto& b : bounds_table({32, 9})) exact += b.applicable ? 0 : 1;
  CHECK(exact == 30);
}
