#include <doctest.h>

#include <random>
#include <thread>
#include <vector>

#include "consec/pascal.hpp"

using namespace consec;

namespace {

// Row of (1 + z + ... + z^cap)^bins by repeated polynomial multiplication.
std::vector<ExactInteger> convolution_row(std::int64_t bins, std::int64_t cap) {
  std::vector<ExactInteger> row{1};
  for (std::int64_t m = 0; m < bins; ++m) {
    std::vector<ExactInteger> next(row.size() + static_cast<std::size_t>(cap));
    for (std::size_t a = 0; a < row.size(); ++a) {
      for (std::int64_t t = 0; t <= cap; ++t) next[a + static_cast<std::size_t>(t)] += row[a];
    }
    row = std::move(next);
  }
  return row;
}

// Counts fillings of `bins` bins with values 0..cap summing to `balls`.
std::int64_t brute_fillings(std::int64_t bins, std::int64_t balls, std::int64_t cap) {
  if (bins == 0) return balls == 0 ? 1 : 0;
  std::int64_t total = 0;
  for (std::int64_t t = 0; t <= cap && t <= balls; ++t) total += brute_fillings(bins - 1, balls - t, cap);
  return total;
}

}  // namespace

TEST_CASE("binomial: known values and out-of-range convention") {
  CHECK(binomial(16, 5) == 4368);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-2, 1) == 0);
  CHECK(binomial(64, 32) == ExactInteger("1832624140942590534"));
  CHECK(binomial(200, 100) == ExactInteger("90548514656103281165404177077484163874504589675413336841320"));
}

TEST_CASE("binomial: agrees with the Pascal recurrence up to m = 80") {
  std::vector<ExactInteger> row{1};
  for (std::int64_t m = 1; m <= 80; ++m) {
    std::vector<ExactInteger> next(row.size() + 1);
    for (std::size_t r = 0; r < next.size(); ++r) {
      if (r < row.size()) next[r] += row[r];
      if (r > 0) next[r] += row[r - 1];
    }
    row = std::move(next);
    for (std::int64_t r = 0; r <= m; ++r) {
      REQUIRE(binomial(m, r) == row[static_cast<std::size_t>(r)]);
    }
  }
}

TEST_CASE("gp_coefficient: examples") {
  CHECK(gp_coefficient({.bins = 3, .balls = 3, .cap = 2}) == 7);
  CHECK(brute_fillings(3, 3, 2) == 7);
  CHECK(gp_coefficient({.bins = 2, .balls = 5, .cap = 2}) == 0);
  CHECK(gp_coefficient({.bins = 6, .balls = 11, .cap = 2}) == brute_fillings(6, 11, 2));
  CHECK(gp_coefficient({.bins = 0, .balls = 0, .cap = 4}) == 1);
  CHECK(gp_coefficient({.bins = 0, .balls = 1, .cap = 4}) == 0);
  CHECK(gp_coefficient({.bins = 5, .balls = 0, .cap = 0}) == 1);
  CHECK_THROWS_AS(gp_coefficient({.bins = -1, .balls = 0, .cap = 1}), ValidationError);
}

TEST_CASE("gp_coefficient: cap 1 gives binomials, large cap gives unrestricted compositions") {
  for (std::int64_t bins = 0; bins <= 20; ++bins) {
    for (std::int64_t a = 0; a <= bins; ++a) {
      REQUIRE(gp_coefficient({.bins = bins, .balls = a, .cap = 1}) == binomial(bins, a));
    }
  }
  for (std::int64_t bins = 1; bins <= 10; ++bins) {
    for (std::int64_t a = 0; a <= 8; ++a) {
      for (std::int64_t cap = a; cap <= a + 2; ++cap) {
        REQUIRE(gp_coefficient({.bins = bins, .balls = a, .cap = cap}) ==
                binomial(a + bins - 1, bins - 1));
      }
    }
  }
}

TEST_CASE("gp_row: examples") {
  CHECK(gp_row(3, 2) == GpRow{1, 3, 6, 7, 6, 3, 1});
  CHECK(gp_row(0, 5) == GpRow{1});
  CHECK(gp_row(1, 3) == GpRow{1, 1, 1, 1});
  CHECK(gp_row(4, 0) == GpRow{1});
}

TEST_CASE("gp_row: DP matches self-convolution for bins <= 12, cap <= 6") {
  for (std::int64_t bins = 0; bins <= 12; ++bins) {
    for (std::int64_t cap = 0; cap <= 6; ++cap) {
      const auto row = gp_row(bins, cap);
      REQUIRE(row == convolution_row(bins, cap));
      for (std::size_t a = 0; a < row.size(); ++a) {
        REQUIRE(gp_coefficient({.bins = bins, .balls = static_cast<std::int64_t>(a), .cap = cap}) == row[a]);
      }
    }
  }
}

TEST_CASE("gp_row: symmetry and row sum on random shapes") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::int64_t> bins_dist(0, 30), cap_dist(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto bins = bins_dist(rng);
    const auto cap = cap_dist(rng);
    const auto row = gp_row(bins, cap);
    REQUIRE(row.size() == static_cast<std::size_t>(bins * cap + 1));
    ExactInteger sum = 0;
    for (std::size_t a = 0; a < row.size(); ++a) {
      REQUIRE(row[a] == row[row.size() - 1 - a]);
      sum += row[a];
    }
    REQUIRE(sum == boost::multiprecision::pow(ExactInteger(cap + 1), static_cast<unsigned>(bins)));
  }
}

TEST_CASE("GpRowCache: memoizes rows and matches direct computation") {
  GpRowCache cache;
  const auto first = cache.row(7, 3);
  const auto second = cache.row(7, 3);
  CHECK(first.get() == second.get());
  CHECK(*first == gp_row(7, 3));
  CHECK(cache.size() == 1);
  CHECK(cache.coefficient({.bins = 3, .balls = 3, .cap = 2}) == 7);
  CHECK(cache.coefficient({.bins = 3, .balls = 9, .cap = 2}) == 0);
  CHECK(cache.size() == 2);
}

TEST_CASE("GpRowCache: concurrent lookups agree") {
  GpRowCache cache;
  std::vector<std::thread> workers;
  std::vector<int> ok(8, 0);
  for (int w = 0; w < 8; ++w) {
    workers.emplace_back([&cache, &ok, w] {
      bool all = true;
      for (std::int64_t bins = 0; bins <= 12; ++bins) {
        const auto cap = (bins + w) % 5;
        all = all && (*cache.row(bins, cap) == gp_row(bins, cap));
      }
      ok[static_cast<std::size_t>(w)] = all ? 1 : 0;
    });
  }
  for (auto& t : workers) t.join();
  for (int v : ok) CHECK(v == 1);
  CHECK(cache.size() <= 13 * 5);
}
