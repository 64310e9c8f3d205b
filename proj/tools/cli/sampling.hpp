#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace tmra::cli {

/// Check points for verify. MT19937-64 (std::mt19937_64, the 64-bit
/// Mersenne Twister of Matsumoto and Nishimura); a double is built from the
/// top 53 bits of one draw, so the stream is the same on every platform.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  /// Re in [-3, 3], Im in [0.1, 3].
  std::complex<double> upper() { return {uniform(-3.0, 3.0), uniform(0.1, 3.0)}; }
  double real() { return uniform(-4.0, 4.0); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace tmra::cli
