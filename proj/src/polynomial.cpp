#include "consec/polynomial.hpp"

#include <charconv>
#include <algorithm>
#include <cmath>
#include <regex>
#include <string>
#include <type_traits>

namespace consec {

namespace {

template <typename T>
T ipow(T base, std::int64_t exp) {
  T result(1);
  while (exp > 0) {
    if (exp & 1) result *= base;
    exp >>= 1;
    if (exp > 0) base *= base;
  }
  return result;
}

ExactInteger pow10(std::int64_t e) { return ipow(ExactInteger(10), e); }

// Decimal digit string to integer. cpp_int would read a leading 0 as octal.
ExactInteger parse_natural(std::string digits) {
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
  return digits.empty() ? ExactInteger(0) : ExactInteger(digits);
}

void check_unit(const Rational& p) {
  if (p < 0 || p > 1) throw ValidationError("p must lie in [0, 1] (got " + p.str() + ")");
}

}  // namespace

Probability::Probability(Rational p) : value_(std::move(p)) { check_unit(std::get<Rational>(value_)); }

Probability::Probability(double p) : value_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("p must lie in [0, 1] (got " + std::to_string(p) + ")");
  }
}

Probability Probability::parse(std::string_view text) {
  static const std::regex fraction(R"(^\s*(\d+)\s*/\s*(\d+)\s*$)");
  static const std::regex decimal(R"(^\s*\+?(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    const ExactInteger num = parse_natural(m[1].str());
    const ExactInteger den = parse_natural(m[2].str());
    if (den == 0) throw ValidationError("p has a zero denominator: '" + s + "'");
    return Probability(Rational(num, den));
  }
  if (std::regex_match(s, m, decimal) && (m[1].length() > 0 || m[2].length() > 0)) {
    const std::string whole = m[1].str();
    const std::string frac = m[2].str();
    std::int64_t exponent = 0;
    if (m[3].matched) {
      const std::string e = m[3].str();
      const char* first = e.data() + (e.front() == '+' ? 1 : 0);
      auto [ptr, ec] = std::from_chars(first, e.data() + e.size(), exponent);
      if (ec != std::errc{} || std::abs(exponent) > 4096) {
        throw ValidationError("p exponent out of range: '" + s + "'");
      }
    }
    const ExactInteger digits = parse_natural(whole + frac);
    exponent -= static_cast<std::int64_t>(frac.size());
    Rational value = exponent >= 0 ? Rational(digits * pow10(exponent))
                                   : Rational(digits, pow10(-exponent));
    return Probability(std::move(value));
  }
  throw ValidationError("cannot parse probability '" + s + "'");
}

double Probability::to_double() const {
  if (const auto* d = std::get_if<double>(&value_)) return *d;
  return rational().convert_to<double>();
}

double to_double(const ReliabilityValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return std::get<Rational>(v).convert_to<double>();
}

std::string to_string(const ReliabilityValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->str();
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::get<double>(v));
  return std::string(buf, ptr);
}

ReliabilityValue evaluate_bernstein(std::span<const ExactInteger> coeffs, const Probability& p) {
  if (coeffs.empty()) throw ValidationError("empty coefficient sequence");
  const auto n = static_cast<std::int64_t>(coeffs.size()) - 1;
  if (p.is_exact()) {
    // With p = a/b: sum_i N_i a^i (b-a)^{n-i} / b^n, reduced once at the end.
    const ExactInteger a = numerator(p.rational());
    const ExactInteger b = denominator(p.rational());
    const ExactInteger c = b - a;
    ExactInteger sum = 0;
    for (std::int64_t i = n; i >= 0; --i) {
      const auto& coeff = coeffs[static_cast<std::size_t>(i)];
      if (coeff == 0) continue;
      sum += coeff * ipow(a, i) * ipow(c, n - i);
    }
    return Rational(sum, ipow(b, n));
  }
  const double pf = p.to_double();
  const double qf = 1.0 - pf;
  double sum = 0.0;
  for (std::int64_t i = n; i >= 0; --i) {
    const auto& coeff = coeffs[static_cast<std::size_t>(i)];
    if (coeff == 0) continue;
    sum += coeff.convert_to<double>() * ipow(pf, i) * ipow(qf, n - i);
  }
  return sum;
}

namespace {

std::vector<ExactInteger> exact_coefficients(const SystemParams& params) {
  std::vector<ExactInteger> coeffs;
  coeffs.reserve(static_cast<std::size_t>(params.n() + 1));
  for (std::int64_t i = 0; i <= params.n(); ++i) coeffs.push_back(coefficient_exact(params, i));
  return coeffs;
}

}  // namespace

ReliabilityResult reliability(const SystemParams& params, const Probability& p) {
  const auto coeffs = exact_coefficients(params);
  return {.value = evaluate_bernstein(coeffs, p), .low = std::nullopt, .high = std::nullopt,
          .mode = EvalMode::Exact};
}

ReliabilityResult reliability_interval(const SystemParams& params, const Probability& p) {
  const auto table = bounds_table(params);
  std::vector<ExactInteger> exact, lower, upper;
  bool bounded = false;
  for (const auto& row : table) {
    lower.push_back(row.lower);
    upper.push_back(row.upper);
    exact.push_back(row.applicable ? coefficient_exact(params, row.i) : row.lower);
    bounded = bounded || row.applicable;
  }
  ReliabilityResult result{.value = evaluate_bernstein(exact, p), .low = {}, .high = {},
                           .mode = bounded ? EvalMode::Bounded : EvalMode::Exact};
  if (bounded) {
    result.low = evaluate_bernstein(lower, p);
    result.high = evaluate_bernstein(upper, p);
  } else {
    result.low = result.value;
    result.high = result.value;
  }
  return result;
}

namespace {

template <typename T>
T lift(const ExactInteger& c) {
  if constexpr (std::is_same_v<T, double>) {
    return c.convert_to<double>();
  } else {
    return T(c);
  }
}

template <typename T>
T closed_form(const SystemParams& params, const T& p) {
  const auto n = params.n();
  const auto k = params.k();
  if (k == 1) return ipow(p, n);
  const T q = T(1) - p;
  T sum(0);
  // k == n: N_{n,n,i} = C(n, i) for i >= 1; k == 2: N_{n,2,i} = C(i+1, n-i).
  for (std::int64_t i = n; i >= (k == n ? 1 : 0); --i) {
    const auto c = k == n ? binomial(n, i) : binomial(i + 1, n - i);
    if (c == 0) continue;
    sum += lift<T>(c) * ipow(p, i) * ipow(q, n - i);
  }
  return sum;
}

}  // namespace

ReliabilityResult reliability_closed_form(const SystemParams& params, const Probability& p) {
  const auto k = params.k();
  if (k != 1 && k != 2 && k != params.n()) {
    throw DomainError("closed form exists only for k in {1, 2, n}; use reliability()");
  }
  ReliabilityValue value = p.is_exact()
                               ? ReliabilityValue(closed_form(params, p.rational()))
                               : ReliabilityValue(closed_form(params, p.to_double()));
  return {.value = std::move(value), .low = std::nullopt, .high = std::nullopt,
          .mode = EvalMode::Exact};
}

ReliabilityValue reliability_double_sum(const SystemParams& params, const Probability& p) {
  const auto n = params.n();
  const auto k = params.k();
  const auto start = threshold_i(params) + 1;
  std::vector<ExactInteger> coeffs(static_cast<std::size_t>(n + 1));
  for (std::int64_t i = start; i <= n; ++i) coeffs[static_cast<std::size_t>(i)] = binomial(n, i);
  for (std::int64_t i = start; i <= n - k; ++i) {
    ExactInteger correction = 0;
    for (std::int64_t j = 1; j <= (n - i) / k; ++j) {
      const ExactInteger term = binomial(i + 1, j) * binomial(n - j * k, i);
      if (j % 2 == 1) {
        correction += term;
      } else {
        correction -= term;
      }
    }
    coeffs[static_cast<std::size_t>(i)] -= correction;
  }
  return evaluate_bernstein(coeffs, p);
}

}  // namespace consec
