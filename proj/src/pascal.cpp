#include "consec/pascal.hpp"

#include <algorithm>
#include <stdexcept>

namespace consec {

ExactInteger binomial(std::int64_t m, std::int64_t r) {
  if (m < 0 || r < 0 || r > m) return 0;
  r = std::min(r, m - r);
  ExactInteger c = 1;
  // c stays integral: after step j it equals C(m - r + j, j).
  for (std::int64_t j = 1; j <= r; ++j) {
    c *= (m - r + j);
    c /= j;
  }
  return c;
}

namespace {

void check_nonnegative(std::int64_t bins, std::int64_t cap) {
  if (bins < 0 || cap < 0) throw ValidationError("bins and cap must be nonnegative");
}

// One step of T(m, a) = sum_{t=0}^{min(cap, a)} T(m-1, a-t), kept as a
// sliding window over the previous row, truncated to `width` entries.
GpRow advance(const GpRow& prev, std::int64_t cap, std::size_t width) {
  const auto span = static_cast<std::size_t>(cap) + 1;
  GpRow next(width);
  ExactInteger window = 0;
  for (std::size_t a = 0; a < width; ++a) {
    if (a < prev.size()) window += prev[a];
    if (a >= span && a - span < prev.size()) window -= prev[a - span];
    next[a] = window;
  }
  return next;
}

}  // namespace

GpRow gp_row(std::int64_t bins, std::int64_t cap) {
  check_nonnegative(bins, cap);
  GpRow prev{1};
  for (std::int64_t m = 1; m <= bins; ++m) {
    prev = advance(prev, cap, static_cast<std::size_t>(m * cap + 1));
  }
  return prev;
}

ExactInteger gp_coefficient(const CappedBinsSpec& spec) {
  check_nonnegative(spec.bins, spec.cap);
  if (spec.balls < 0 || spec.balls > spec.bins * spec.cap) return 0;
  // Fold by symmetry so the row is only built as far as needed.
  const std::int64_t top = spec.bins * spec.cap;
  const std::int64_t a = std::min(spec.balls, top - spec.balls);
  GpRow prev{1};
  for (std::int64_t m = 1; m <= spec.bins; ++m) {
    prev = advance(prev, spec.cap, static_cast<std::size_t>(std::min(m * spec.cap, a) + 1));
  }
  return prev[static_cast<std::size_t>(a)];
}

std::shared_ptr<const GpRow> GpRowCache::row(std::int64_t bins, std::int64_t cap) {
  check_nonnegative(bins, cap);
  const auto key = std::make_pair(bins, cap);
  {
    std::lock_guard lock(mutex_);
    if (auto it = rows_.find(key); it != rows_.end()) return it->second;
  }
  auto computed = std::make_shared<const GpRow>(gp_row(bins, cap));
  std::lock_guard lock(mutex_);
  return rows_.try_emplace(key, std::move(computed)).first->second;
}

ExactInteger GpRowCache::coefficient(const CappedBinsSpec& spec) {
  auto r = row(spec.bins, spec.cap);
  if (spec.balls < 0 || spec.balls >= static_cast<std::int64_t>(r->size())) return 0;
  return (*r)[static_cast<std::size_t>(spec.balls)];
}

std::size_t GpRowCache::size() const {
  std::lock_guard lock(mutex_);
  return rows_.size();
}

}  // namespace consec
