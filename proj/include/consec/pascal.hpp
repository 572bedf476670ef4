#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "consec/exact.hpp"

namespace consec {

/// Binomial coefficient C(m, r). Total: returns 0 when r < 0, m < 0 or r > m.
ExactInteger binomial(std::int64_t m, std::int64_t r);

/// Parameters of the capped balls-in-bins count: the coefficient of
/// z^balls in (1 + z + ... + z^cap)^bins.
struct CappedBinsSpec {
  std::int64_t bins = 0;
  std::int64_t balls = 0;
  std::int64_t cap = 0;
};

using GpRow = std::vector<ExactInteger>;

/// Number of ways to place `balls` identical balls into `bins` ordered bins
/// holding at most `cap` balls each. Zero when balls > bins * cap.
ExactInteger gp_coefficient(const CappedBinsSpec& spec);

/// Full row a = 0 .. bins*cap of generalized Pascal coefficients, built by
/// the recurrence T(m, a) = sum_{t=0}^{min(cap, a)} T(m-1, a-t).
GpRow gp_row(std::int64_t bins, std::int64_t cap);

/// Caller-owned memo of generalized Pascal rows keyed by (bins, cap).
/// Rows are never evicted while the cache lives. Lookups are thread-safe.
class GpRowCache {
 public:
  std::shared_ptr<const GpRow> row(std::int64_t bins, std::int64_t cap);
  ExactInteger coefficient(const CappedBinsSpec& spec);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::shared_ptr<const GpRow>> rows_;
};

}  // namespace consec
