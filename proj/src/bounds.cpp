#include "consec/bounds.hpp"

#include <algorithm>
#include <string>

namespace consec {

IndexRange bounded_range(const SystemParams& params) {
  return {.first = threshold_i(params) + 1, .last = params.n() - 3 * params.k()};
}

namespace {

void require_bounded(const SystemParams& params, std::int64_t i) {
  if (i < 0 || i > params.n()) {
    throw IndexError("index i=" + std::to_string(i) + " outside [0, " +
                     std::to_string(params.n()) + "]");
  }
  if (!bounded_range(params).contains(i)) {
    throw DomainError("N_{n,k,i} has an exact formula at n=" + std::to_string(params.n()) +
                      " k=" + std::to_string(params.k()) + " i=" + std::to_string(i) +
                      "; use coefficient_exact");
  }
}

}  // namespace

ExactInteger lower_bound(const SystemParams& params, std::int64_t i) {
  require_bounded(params, i);
  return std::max(ExactInteger(0), two_term(params, i));
}

ExactInteger upper_bound(const SystemParams& params, std::int64_t i) {
  require_bounded(params, i);
  return std::min(binomial(params.n(), i), three_term(params, i));
}

std::vector<BoundsPair> bounds_table(const SystemParams& params) {
  const auto range = bounded_range(params);
  std::vector<BoundsPair> table;
  table.reserve(static_cast<std::size_t>(params.n() + 1));
  for (std::int64_t i = 0; i <= params.n(); ++i) {
    if (range.contains(i)) {
      table.push_back({i, lower_bound(params, i), upper_bound(params, i), true});
    } else {
      auto exact = coefficient_exact(params, i);
      table.push_back({i, exact, exact, false});
    }
  }
  return table;
}

std::vector<CoefficientReport> bounded_coefficient_table(const SystemParams& params) {
  auto table = coefficient_table(params);
  const auto range = bounded_range(params);
  for (auto& report : table) {
    if (!range.contains(report.i)) continue;
    report.value.reset();
    report.interval = Interval{lower_bound(params, report.i), upper_bound(params, report.i)};
  }
  return table;
}

}  // namespace consec
