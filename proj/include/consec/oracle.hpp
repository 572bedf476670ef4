#pragma once

#include <cstdint>
#include <vector>

#include "consec/exact.hpp"
#include "consec/system.hpp"

namespace consec {

/// Ground-truth survivor counts. counts[i] is the number of length-n
/// success/failure sequences with exactly i successes whose longest failure
/// run is shorter than k. Computed without any binomial or closed-form code.
struct OracleRow {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::vector<ExactInteger> counts;
};

inline constexpr std::int64_t kEnumerateMaxN = 22;
inline constexpr std::int64_t kDynamicMaxN = 4096;

/// Exhaustive walk over all 2^n sequences. Throws CapacityError for n > 22.
OracleRow oracle_enumerate(const SystemParams& params);

/// Run-length dynamic program over (trailing failure run, successes so far).
/// Throws CapacityError for n > 4096.
OracleRow oracle_dp(const SystemParams& params);

}  // namespace consec
