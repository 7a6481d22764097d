#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace nlheat {

// Deterministic draws on top of mt19937_64.  The standard pins the engine's
// output bit for bit, while std::*_distribution sequences are free to differ
// across library versions, so the transforms live here.
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Inclusive on both ends.  The modulo bias is far below anything the
  // sampling-based checks can resolve.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(eng_() % static_cast<uint64_t>(hi - lo + 1));
  }

  // Standard normal via Box-Muller, one value per call.
  double normal() {
    if (have_) {
      have_ = false;
      return cached_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * 3.14159265358979323846 * u2;
    cached_ = rad * std::sin(ang);
    have_ = true;
    return rad * std::cos(ang);
  }

private:
  std::mt19937_64 eng_;
  bool have_ = false;
  double cached_ = 0.0;
};

// SplitMix64 step, used to decorrelate (seed, index) pairs so that suite
// membership does not depend on how many members are requested.
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace nlheat
