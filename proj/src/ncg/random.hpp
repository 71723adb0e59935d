#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ncg {

// Platform-independent sampling on top of mt19937_64, whose output sequence
// is fixed by the standard. The std distributions are not, so uniform and
// normal draws are derived here directly from raw engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Kinderman-Monahan ratio of uniforms. The returned value is a plain
  // quotient, so it does not inherit libm rounding differences; log only
  // decides acceptance.
  double normal() {
    constexpr double kSpan = 0.8577638849607068;  // sqrt(2/e)
    for (;;) {
      const double u = 1.0 - uniform();
      const double v = kSpan * (2.0 * uniform() - 1.0);
      const double x = v / u;
      if (x * x <= -4.0 * std::log(u)) return x;
    }
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ncg
