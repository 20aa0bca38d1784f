#pragma once

// Deterministic random draws: mt19937_64 raw output with explicit modulo
// reduction, so sequences are identical across standard libraries (the std
// distribution objects are not portable).

#include <cstdint>
#include <random>

namespace tmc {

class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // uniform in [0, n), n > 0
  long below(long n) { return static_cast<long>(raw() % static_cast<std::uint64_t>(n)); }

  // uniform in [lo, hi], inclusive
  long range(long lo, long hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace tmc
