#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "consec/exact.hpp"
#include "consec/pascal.hpp"
#include "consec/system.hpp"

namespace consec {

/// Which formula yields N_{n,k,i}. The five regions partition {0, ..., n}.
enum class RegionTag { Zero, FullBinomial, TwoTerm, ThreeTerm, GeneralSum };

std::string_view to_string(RegionTag tag);

struct Interval {
  ExactInteger lower;
  ExactInteger upper;
};

/// Value of one coefficient N_{n,k,i}: either exact or bracketed.
struct CoefficientReport {
  std::int64_t i = 0;
  RegionTag region = RegionTag::Zero;
  std::optional<ExactInteger> value;
  std::optional<Interval> interval;

  bool is_exact() const { return value.has_value(); }
};

/// Largest index i for which N_{n,k,i} vanishes, i.e. the largest i with
/// (i+1)(k-1) < n-i. Equals floor((n-k+1)/k) unless k divides n+1.
std::int64_t threshold_i(const SystemParams& params);

/// Region of index i. Throws IndexError unless 0 <= i <= n.
RegionTag classify(const SystemParams& params, std::int64_t i);

/// N_{n,k,i}: number of length-n trial sequences with exactly i successes and
/// no run of k failures. Dispatches on classify() to the cheapest formula.
ExactInteger coefficient_exact(const SystemParams& params, std::int64_t i);

/// N_{n,k,i} as [z^{n-i}](1 + z + ... + z^{k-1})^{i+1}.
ExactInteger coefficient_via_gp(const SystemParams& params, std::int64_t i);
ExactInteger coefficient_via_gp(const SystemParams& params, std::int64_t i, GpRowCache& cache);

/// Exact reports for i = 0 .. n.
std::vector<CoefficientReport> coefficient_table(const SystemParams& params);

/// The inclusion-exclusion sum
///   sum_{j=0}^{J} (-1)^j C(i+1, j) C(n-jk, i),  J = min(last_term, floor((n-i)/k)).
/// With last_term unset this is the full sum and equals N_{n,k,i} for every i.
/// Truncations after j = 1 and j = 2 give the two- and three-term expressions.
/// Partial sums can be negative; the caller decides how to clamp.
ExactInteger inclusion_exclusion(const SystemParams& params, std::int64_t i,
                                 std::optional<std::int64_t> last_term = std::nullopt);

/// C(n, i) - (i+1) C(n-k, i)
ExactInteger two_term(const SystemParams& params, std::int64_t i);

/// C(n, i) - (i+1) C(n-k, i) + C(i+1, 2) C(n-2k, i)
ExactInteger three_term(const SystemParams& params, std::int64_t i);

}  // namespace consec
