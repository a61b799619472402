#pragma once

#include "g2flag/scalar.hpp"

#include <cstdint>

namespace g2flag {

/// Deterministic fixed-seed generator producing small exact scalars, so test
/// inputs are reproducible across platforms and standard-library versions.
class SmallRationalRng {
public:
  explicit SmallRationalRng(std::uint64_t seed) : state_(seed == 0 ? 1 : seed) {}

  std::uint64_t next_u64() {
    // xorshift64*: simple, fully specified, good enough for sampling inputs.
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform integer in [lo, hi].
  long next_int(long lo, long hi) {
    return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Small rational p/q with p in [-max_num, max_num], q in [1, max_den].
  QF13 next_rational(long max_num = 6, long max_den = 4) {
    return QF13(Rational(next_int(-max_num, max_num), next_int(1, max_den)));
  }

  /// Small positive rational in (0, max_num].
  QF13 next_positive_rational(long max_num = 6, long max_den = 4) {
    return QF13(Rational(next_int(1, max_num), next_int(1, max_den)));
  }

  double next_double(double lo, double hi) {
    double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

private:
  std::uint64_t state_;
};

}  // namespace g2flag
