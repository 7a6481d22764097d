#include "random_fields.hpp"

#include <cmath>

#include "errors.hpp"
#include "rng.hpp"

namespace nlheat {

RadialField suite_field(const GridPtr& grid, uint64_t seed, int index) {
  if (index < 0) fail(errc::invalid_argument, "suite_field: index must be nonnegative");
  Rng rng(mix_seed(seed, static_cast<uint64_t>(index)));
  RadialField f = zero_field(grid);
  const auto& r = grid->nodes();

  if (index % 2 == 0) {
    const int components = 1 + rng.uniform_int(0, 2);
    for (int c = 0; c < components; ++c) {
      const double amp = rng.uniform(0.2, 2.0);
      const double sigma = rng.uniform(0.5, 2.0);
      const double center = rng.uniform() < 0.5 ? 0.0 : rng.uniform(0.5, 5.0);
      for (size_t i = 0; i < r.size(); ++i) {
        const double dm = (r[i] - center) / sigma;
        const double dp = (r[i] + center) / sigma;
        f.values[i] += amp * (std::exp(-dm * dm) + std::exp(-dp * dp));
      }
    }
  } else {
    const double amp = rng.uniform(0.2, 2.0);
    const double sigma = rng.uniform(0.8, 1.5);
    const double a = rng.uniform(1.0, 3.0);
    for (size_t i = 0; i < r.size(); ++i) f.values[i] = amp * std::exp(-std::pow(r[i] / sigma, a));
  }
  return f;
}

const char* suite_family_name(int index) {
  if (index < 0) fail(errc::invalid_argument, "suite_family_name: index must be nonnegative");
  return index % 2 == 0 ? "gaussian_mixture" : "stretched_exponential";
}

}  // namespace nlheat
