#pragma once

#include <cstdint>
#include <random>

#include "dageom/scalar.hpp"

namespace dageom {

// Deterministic rational sampler for randomized verification suites. The
// seed fully determines the stream; draws avoid std::uniform_* so that the
// sequence does not depend on the standard library build.
class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed) : eng_(seed) {}

  long uniform_int(long lo, long hi) {
    return lo + static_cast<long>(eng_() %
                                  static_cast<std::uint64_t>(hi - lo + 1));
  }

  // numerator in [-num_abs, num_abs], denominator in [1, den_max]
  Rat rat(long num_abs = 30, long den_max = 10) {
    return Rat(uniform_int(-num_abs, num_abs), uniform_int(1, den_max));
  }

  Rat nonzero_rat(long num_abs = 30, long den_max = 10) {
    for (;;) {
      Rat r = rat(num_abs, den_max);
      if (r != Rat(0)) return r;
    }
  }

  Rat positive_rat(long num_abs = 30, long den_max = 10) {
    return Rat(uniform_int(1, num_abs), uniform_int(1, den_max));
  }

  // strictly inside (0, 1)
  Rat unit_open(long den_max = 64) {
    long d = uniform_int(2, den_max);
    return Rat(uniform_int(1, d - 1), d);
  }

  double real(double lo, double hi) {
    const double x = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + x * (hi - lo);
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace dageom
