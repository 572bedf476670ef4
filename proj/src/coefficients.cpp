#include "consec/coefficients.hpp"

#include <algorithm>
#include <string>

namespace consec {

std::string_view to_string(RegionTag tag) {
  switch (tag) {
    case RegionTag::Zero: return "zero";
    case RegionTag::FullBinomial: return "full_binomial";
    case RegionTag::TwoTerm: return "two_term";
    case RegionTag::ThreeTerm: return "three_term";
    case RegionTag::GeneralSum: return "general_sum";
  }
  return "unknown";
}

namespace {

void check_index(const SystemParams& params, std::int64_t i) {
  if (i < 0 || i > params.n()) {
    throw IndexError("index i=" + std::to_string(i) + " outside [0, " +
                     std::to_string(params.n()) + "]");
  }
}

}  // namespace

std::int64_t threshold_i(const SystemParams& params) {
  // i+1 bins of capacity k-1 cannot hold n-i balls iff i*k <= n-k.
  return (params.n() - params.k()) / params.k();
}

RegionTag classify(const SystemParams& params, std::int64_t i) {
  check_index(params, i);
  const auto n = params.n();
  const auto k = params.k();
  if (i <= threshold_i(params)) return RegionTag::Zero;
  if (i >= n - k + 1) return RegionTag::FullBinomial;
  if (i >= n - 2 * k + 1) return RegionTag::TwoTerm;
  if (i >= n - 3 * k + 1) return RegionTag::ThreeTerm;
  return RegionTag::GeneralSum;
}

ExactInteger inclusion_exclusion(const SystemParams& params, std::int64_t i,
                                 std::optional<std::int64_t> last_term) {
  check_index(params, i);
  const auto n = params.n();
  const auto k = params.k();
  std::int64_t terms = (n - i) / k;
  if (last_term) terms = std::min(terms, *last_term);
  ExactInteger sum = 0;
  for (std::int64_t j = 0; j <= terms; ++j) {
    ExactInteger term = binomial(i + 1, j) * binomial(n - j * k, i);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

ExactInteger two_term(const SystemParams& params, std::int64_t i) {
  const auto n = params.n();
  const auto k = params.k();
  return binomial(n, i) - (i + 1) * binomial(n - k, i);
}

ExactInteger three_term(const SystemParams& params, std::int64_t i) {
  const auto n = params.n();
  const auto k = params.k();
  return two_term(params, i) + binomial(i + 1, 2) * binomial(n - 2 * k, i);
}

ExactInteger coefficient_exact(const SystemParams& params, std::int64_t i) {
  ExactInteger value;
  switch (classify(params, i)) {
    case RegionTag::Zero: return 0;
    case RegionTag::FullBinomial: return binomial(params.n(), i);
    case RegionTag::TwoTerm: value = two_term(params, i); break;
    case RegionTag::ThreeTerm: value = three_term(params, i); break;
    case RegionTag::GeneralSum: value = inclusion_exclusion(params, i); break;
  }
  if (value < 0) {
    throw std::logic_error("negative coefficient for n=" + std::to_string(params.n()) +
                           " k=" + std::to_string(params.k()) + " i=" + std::to_string(i));
  }
  return value;
}

ExactInteger coefficient_via_gp(const SystemParams& params, std::int64_t i) {
  check_index(params, i);
  return gp_coefficient({.bins = i + 1, .balls = params.n() - i, .cap = params.k() - 1});
}

ExactInteger coefficient_via_gp(const SystemParams& params, std::int64_t i, GpRowCache& cache) {
  check_index(params, i);
  return cache.coefficient({.bins = i + 1, .balls = params.n() - i, .cap = params.k() - 1});
}

std::vector<CoefficientReport> coefficient_table(const SystemParams& params) {
  std::vector<CoefficientReport> table;
  table.reserve(static_cast<std::size_t>(params.n() + 1));
  for (std::int64_t i = 0; i <= params.n(); ++i) {
    table.push_back({.i = i, .region = classify(params, i),
                     .value = coefficient_exact(params, i), .interval = std::nullopt});
  }
  return table;
}

}  // namespace consec
