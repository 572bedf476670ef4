#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "consec/coefficients.hpp"
#include "consec/polynomial.hpp"
#include "consec/table.hpp"

namespace consec {

/// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitMismatch = 2;

enum class ReliabilityMode { Exact, Interval, Both };

ReliabilityMode parse_mode(std::string_view name);

/// "0.3", "0.1,0.5,0.9" or "start:step:end" (inclusive, exact arithmetic).
std::vector<Probability> parse_grid(std::string_view text);

/// Columns: n,k,i,region,value
Table coeffs_report(const SystemParams& params);

/// Columns: n,k,i,region,applicable,lower,upper,exact
Table bounds_report(const SystemParams& params);

/// Columns: p,R (exact), p,R_L,R_U (interval) or p,R,R_L,R_U (both).
/// Values are evaluated in exact rational arithmetic and rounded once.
Table reliability_report(const SystemParams& params, const std::vector<Probability>& grid,
                         ReliabilityMode mode);

/// Which bound the relative-error grid reports for a given k. For k >= 3 this
/// is L below floor(n/3) and at or above floor(n/2), and U in between; k = 1
/// and k = 2 have direct closed forms and report none.
enum class PlottedBound { None, Lower, Upper };

PlottedBound plotted_bound(std::int64_t n, std::int64_t k);
std::string_view to_string(PlottedBound bound);

/// Relative-error grid over all k = 1..n, i = 0..n.
/// Columns: n,k,i,region,applicable,plotted,exact,lower,upper,abs_gap,rel_error
/// rel_error is 1 - B/N for the plotted bound B on applicable indices, 0 otherwise.
/// abs_gap is N - L on applicable indices, 0 otherwise.
Table errors_report(std::int64_t n, std::vector<std::string>* warnings = nullptr);

/// Exact vs bounded index counts per k, plus one aggregate row over
/// 3 <= k < floor(n/3). Columns: n,k_first,k_last,indices,exact,bounded,exact_fraction
Table summary_report(std::int64_t n);

struct Mismatch {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t i = 0;
  std::string route;
  ExactInteger expected;
  ExactInteger actual;
};

struct VerifyReport {
  std::int64_t max_n = 0;
  std::int64_t checked = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

using CoefficientFn = std::function<ExactInteger(const SystemParams&, std::int64_t)>;

/// Compares the closed-form coefficients (and the generating-function route)
/// against the oracle for every 1 <= k <= n <= max_n. Enumeration is used up
/// to n = 22, the run-length DP beyond that, and the two oracles are checked
/// against each other where both run.
VerifyReport verify(std::int64_t max_n, const CoefficientFn& coefficient = coefficient_exact);

std::string format_verify(const VerifyReport& report);

}  // namespace consec
