#pragma once

#include <cstdint>
#include <vector>

#include "consec/coefficients.hpp"

namespace consec {

/// Closed integer interval [first, last]; empty when first > last.
struct IndexRange {
  std::int64_t first = 0;
  std::int64_t last = -1;

  bool empty() const { return first > last; }
  bool contains(std::int64_t i) const { return first <= i && i <= last; }
  std::int64_t size() const { return empty() ? 0 : last - first + 1; }
};

struct BoundsPair {
  std::int64_t i = 0;
  ExactInteger lower;
  ExactInteger upper;
  bool applicable = false;
};

/// Indices [threshold_i + 1, n - 3k] where no closed form is available and
/// N_{n,k,i} is bracketed instead. Empty whenever k >= n/3.
IndexRange bounded_range(const SystemParams& params);

/// L = max{0, C(n,i) - (i+1) C(n-k,i)}. Throws DomainError outside bounded_range.
ExactInteger lower_bound(const SystemParams& params, std::int64_t i);

/// U = min{C(n,i), C(n,i) - (i+1) C(n-k,i) + C(i+1,2) C(n-2k,i)}.
/// Throws DomainError outside bounded_range.
ExactInteger upper_bound(const SystemParams& params, std::int64_t i);

/// One pair per i = 0 .. n. Outside bounded_range lower == upper == N_{n,k,i}.
std::vector<BoundsPair> bounds_table(const SystemParams& params);

/// Coefficient table with intervals substituted on bounded_range.
std::vector<CoefficientReport> bounded_coefficient_table(const SystemParams& params);

}  // namespace consec
