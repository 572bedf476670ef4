#include "consec/report.hpp"

#include <limits>
#include <sstream>

#include "consec/bounds.hpp"
#include "consec/oracle.hpp"

namespace consec {

ReliabilityMode parse_mode(std::string_view name) {
  if (name == "exact") return ReliabilityMode::Exact;
  if (name == "interval") return ReliabilityMode::Interval;
  if (name == "both") return ReliabilityMode::Both;
  throw ValidationError("mode must be exact, interval or both (got '" + std::string(name) + "')");
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto at = text.find(sep, start);
    parts.push_back(text.substr(start, at == std::string_view::npos ? at : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

constexpr std::size_t kMaxGridPoints = 1'000'000;

}  // namespace

std::vector<Probability> parse_grid(std::string_view text) {
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ValidationError("grid must be start:step:end");
    // Parse each endpoint as a probability; the step only needs to be positive.
    const Rational start = Probability::parse(parts[0]).rational();
    const Rational end = Probability::parse(parts[2]).rational();
    const Rational step = Probability::parse(parts[1]).rational();
    if (step <= 0) throw ValidationError("grid step must be positive");
    if (end < start) throw ValidationError("grid end must not precede start");
    std::vector<Probability> grid;
    for (Rational p = start; p <= end; p += step) {
      if (grid.size() >= kMaxGridPoints) throw ValidationError("grid has too many points");
      grid.emplace_back(p);
    }
    return grid;
  }
  std::vector<Probability> grid;
  for (auto part : split(text, ',')) grid.push_back(Probability::parse(part));
  return grid;
}

Table coeffs_report(const SystemParams& params) {
  Table t{{"n", "k", "i", "region", "value"}, {}};
  for (const auto& r : coefficient_table(params)) {
    t.rows.push_back({params.n(), params.k(), r.i, std::string(to_string(r.region)), *r.value});
  }
  return t;
}

Table bounds_report(const SystemParams& params) {
  Table t{{"n", "k", "i", "region", "applicable", "lower", "upper", "exact"}, {}};
  for (const auto& b : bounds_table(params)) {
    t.rows.push_back({params.n(), params.k(), b.i, std::string(to_string(classify(params, b.i))),
                      b.applicable, b.lower, b.upper, coefficient_exact(params, b.i)});
  }
  return t;
}

Table reliability_report(const SystemParams& params, const std::vector<Probability>& grid,
                         ReliabilityMode mode) {
  Table t;
  t.columns.push_back("p");
  if (mode != ReliabilityMode::Interval) t.columns.push_back("R");
  if (mode != ReliabilityMode::Exact) {
    t.columns.push_back("R_L");
    t.columns.push_back("R_U");
  }
  for (const auto& p : grid) {
    std::vector<Cell> row{p.to_double()};
    if (mode == ReliabilityMode::Exact) {
      row.emplace_back(to_double(reliability(params, p).value));
    } else {
      const auto r = reliability_interval(params, p);
      if (mode == ReliabilityMode::Both) row.emplace_back(to_double(r.value));
      row.emplace_back(to_double(*r.low));
      row.emplace_back(to_double(*r.high));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

PlottedBound plotted_bound(std::int64_t n, std::int64_t k) {
  if (k <= 2) return PlottedBound::None;
  if (k < n / 3 || k >= n / 2) return PlottedBound::Lower;
  return PlottedBound::Upper;
}

std::string_view to_string(PlottedBound bound) {
  switch (bound) {
    case PlottedBound::None: return "none";
    case PlottedBound::Lower: return "lower";
    case PlottedBound::Upper: return "upper";
  }
  return "none";
}

Table errors_report(std::int64_t n, std::vector<std::string>* warnings) {
  Table t{{"n", "k", "i", "region", "applicable", "plotted", "exact", "lower", "upper", "abs_gap",
           "rel_error"},
          {}};
  for (std::int64_t k = 1; k <= n; ++k) {
    const SystemParams params(n, k);
    const auto plotted = plotted_bound(n, k);
    for (const auto& b : bounds_table(params)) {
      const auto exact = coefficient_exact(params, b.i);
      ExactInteger gap = 0;
      double rel = 0.0;
      if (b.applicable && plotted != PlottedBound::None) {
        gap = exact - b.lower;
        const auto& bound = plotted == PlottedBound::Lower ? b.lower : b.upper;
        if (exact == 0) {
          rel = std::numeric_limits<double>::quiet_NaN();
          if (warnings) {
            warnings->push_back("zero coefficient in bounded range at n=" + std::to_string(n) +
                                " k=" + std::to_string(k) + " i=" + std::to_string(b.i));
          }
        } else {
          rel = (1 - Rational(bound, exact)).convert_to<double>();
        }
      }
      t.rows.push_back({n, k, b.i, std::string(to_string(classify(params, b.i))), b.applicable,
                        std::string(to_string(plotted)), exact, b.lower, b.upper, gap, rel});
    }
  }
  return t;
}

Table summary_report(std::int64_t n) {
  Table t{{"n", "k_first", "k_last", "indices", "exact", "bounded", "exact_fraction"}, {}};
  auto add_row = [&](std::int64_t first, std::int64_t last, std::int64_t bounded) {
    const std::int64_t indices = (last - first + 1) * (n + 1);
    const double fraction = indices ? static_cast<double>(indices - bounded) / indices : 0.0;
    t.rows.push_back({n, first, last, indices, indices - bounded, bounded, fraction});
  };
  std::int64_t band_bounded = 0;
  const std::int64_t band_last = n / 3 - 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    const auto bounded = bounded_range(SystemParams(n, k)).size();
    if (k >= 3 && k <= band_last) band_bounded += bounded;
    add_row(k, k, bounded);
  }
  if (band_last >= 3) add_row(3, band_last, band_bounded);
  return t;
}

VerifyReport verify(std::int64_t max_n, const CoefficientFn& coefficient) {
  if (max_n < 1 || max_n > kDynamicMaxN) {
    throw ValidationError("max-n must lie in [1, " + std::to_string(kDynamicMaxN) + "] (got " +
                          std::to_string(max_n) + ")");
  }
  VerifyReport report{max_n, 0, {}};
  auto check = [&](const SystemParams& params, std::int64_t i, const char* route,
                   const ExactInteger& expected, const ExactInteger& actual) {
    ++report.checked;
    if (expected != actual) {
      report.mismatches.push_back({params.n(), params.k(), i, route, expected, actual});
    }
  };
  for (std::int64_t n = 1; n <= max_n; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      const SystemParams params(n, k);
      const auto dp = oracle_dp(params);
      const bool enumerable = n <= kEnumerateMaxN;
      const auto truth = enumerable ? oracle_enumerate(params) : dp;
      for (std::int64_t i = 0; i <= n; ++i) {
        const auto& expected = truth.counts[static_cast<std::size_t>(i)];
        check(params, i, "closed_form", expected, coefficient(params, i));
        check(params, i, "generating_function", expected, coefficient_via_gp(params, i));
        if (enumerable) check(params, i, "oracle_dp", expected, dp.counts[static_cast<std::size_t>(i)]);
      }
    }
  }
  return report;
}

std::string format_verify(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& m : report.mismatches) {
    out << "MISMATCH n=" << m.n << " k=" << m.k << " i=" << m.i << " route=" << m.route
        << " expected=" << m.expected << " actual=" << m.actual << '\n';
  }
  out << (report.ok() ? "PASS" : "FAIL") << " max_n=" << report.max_n
      << " checked=" << report.checked << " mismatches=" << report.mismatches.size() << '\n';
  return out.str();
}

}  // namespace consec
