#pragma once

#include <cstdint>

#include "consec/exact.hpp"

namespace consec {

/// A consecutive-k-out-of-n:F system: n ordered i.i.d. components, failing
/// iff some k consecutive components all fail. Requires 1 <= k <= n.
class SystemParams {
 public:
  SystemParams(std::int64_t n, std::int64_t k);

  std::int64_t n() const { return n_; }
  std::int64_t k() const { return k_; }

  friend bool operator==(const SystemParams&, const SystemParams&) = default;

 private:
  std::int64_t n_;
  std::int64_t k_;
};

}  // namespace consec
