#pragma once

#include <cstdint>
#include <random>

namespace qgame {

// Seeded uniform generator. mt19937_64 is fully specified by the standard
// and the mapping below avoids std::uniform_real_distribution, whose output
// is implementation-defined; identical seeds therefore give identical
// streams on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  // uniform in [0, 1)
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t next_u64() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace qgame
