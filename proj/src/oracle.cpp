#include "consec/oracle.hpp"

#include <bit>
#include <string>

namespace consec {

OracleRow oracle_enumerate(const SystemParams& params) {
  const auto n = params.n();
  const auto k = params.k();
  if (n > kEnumerateMaxN) {
    throw CapacityError("oracle_enumerate supports n <= " + std::to_string(kEnumerateMaxN) +
                        " (got " + std::to_string(n) + "); use oracle_dp");
  }
  // Plain 64-bit tallies; 2^22 fits comfortably.
  std::vector<std::uint64_t> tally(static_cast<std::size_t>(n + 1), 0);
  const std::uint32_t total = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    // Bit set = component works.
    std::int64_t run = 0;
    bool failed = false;
    for (std::int64_t pos = 0; pos < n && !failed; ++pos) {
      if (mask >> pos & 1u) {
        run = 0;
      } else if (++run >= k) {
        failed = true;
      }
    }
    if (!failed) ++tally[static_cast<std::size_t>(std::popcount(mask))];
  }
  OracleRow row{n, k, {}};
  row.counts.reserve(tally.size());
  for (auto c : tally) row.counts.emplace_back(c);
  return row;
}

OracleRow oracle_dp(const SystemParams& params) {
  const auto n = params.n();
  const auto k = params.k();
  if (n > kDynamicMaxN) {
    throw CapacityError("oracle_dp supports n <= " + std::to_string(kDynamicMaxN) + " (got " +
                        std::to_string(n) + ")");
  }
  const auto width = static_cast<std::size_t>(n + 1);
  const auto runs = static_cast<std::size_t>(k);
  // state[r][s]: prefixes ending in a failure run of length r with s successes.
  std::vector<std::vector<ExactInteger>> state(runs, std::vector<ExactInteger>(width));
  state[0][0] = 1;
  for (std::int64_t pos = 0; pos < n; ++pos) {
    std::vector<std::vector<ExactInteger>> next(runs, std::vector<ExactInteger>(width));
    for (std::size_t r = 0; r < runs; ++r) {
      for (std::size_t s = 0; s <= static_cast<std::size_t>(pos); ++s) {
        const auto& count = state[r][s];
        if (count == 0) continue;
        next[0][s + 1] += count;
        if (r + 1 < runs) next[r + 1][s] += count;
      }
    }
    state = std::move(next);
  }
  OracleRow row{n, k, std::vector<ExactInteger>(width)};
  for (std::size_t r = 0; r < runs; ++r) {
    for (std::size_t s = 0; s < width; ++s) row.counts[s] += state[r][s];
  }
  return row;
}

}  // namespace consec
