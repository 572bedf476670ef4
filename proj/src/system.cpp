#include "consec/system.hpp"

#include <string>

namespace consec {

SystemParams::SystemParams(std::int64_t n, std::int64_t k) : n_(n), k_(k) {
  if (n < 1) throw ValidationError("n must be a positive integer (got " + std::to_string(n) + ")");
  if (k < 1) throw ValidationError("k must be at least 1 (got " + std::to_string(k) + ")");
  if (k > n) {
    throw ValidationError("k must not exceed n (got k=" + std::to_string(k) +
                          ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace consec
