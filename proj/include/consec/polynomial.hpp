#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "consec/bounds.hpp"
#include "consec/coefficients.hpp"

namespace consec {

/// Component success probability p in [0, 1], held either exactly or as a
/// binary double. q = 1 - p is always derived in the same arithmetic.
class Probability {
 public:
  explicit Probability(Rational p);
  explicit Probability(double p);

  /// Parses "1/4", "0.3", "3e-2", "1". Decimal and fraction strings become
  /// exact rationals ("0.3" -> 3/10).
  static Probability parse(std::string_view text);

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  double to_double() const;
  /// The same probability as a double, used for float-mode evaluation.
  Probability as_float() const { return Probability(to_double()); }

  const std::variant<Rational, double>& value() const { return value_; }

 private:
  std::variant<Rational, double> value_;
};

/// Exact rational or double, matching the arithmetic of the input p.
using ReliabilityValue = std::variant<Rational, double>;

double to_double(const ReliabilityValue& v);
/// Shortest round-trip decimal for doubles, "num/den" for rationals.
std::string to_string(const ReliabilityValue& v);

enum class EvalMode { Exact, Bounded };

struct ReliabilityResult {
  ReliabilityValue value;
  std::optional<ReliabilityValue> low;
  std::optional<ReliabilityValue> high;
  EvalMode mode = EvalMode::Exact;
};

/// sum_i coeffs[i] p^i q^{n-i} with n = coeffs.size() - 1, accumulated from
/// i = n down to i = 0. Float results are bit-reproducible for a given input.
ReliabilityValue evaluate_bernstein(std::span<const ExactInteger> coeffs, const Probability& p);

/// R(k, n; p) from exact coefficients.
ReliabilityResult reliability(const SystemParams& params, const Probability& p);

/// R(k, n; p) together with [R_L, R_U], obtained by substituting L and U for
/// the coefficients on bounded_range. Collapses to the exact value when the
/// range is empty.
ReliabilityResult reliability_interval(const SystemParams& params, const Probability& p);

/// Direct special-case formulas for k = 1, k = 2 and k = n. Throws
/// DomainError for any other k.
ReliabilityResult reliability_closed_form(const SystemParams& params, const Probability& p);

/// Binomial tail above threshold_i minus the inclusion-exclusion corrections
/// on (threshold_i, n - k], written as a double sum over (i, j).
ReliabilityValue reliability_double_sum(const SystemParams& params, const Probability& p);

}  // namespace consec
