#include <cmath>
#include <limits>

#include "doctest.h"
#include "errors.hpp"
#include "rng.hpp"
#include "threshold.hpp"

using namespace nlheat;

TEST_CASE("threshold function values") {
  // h(p) = 4(p-1)/(p+1)^2 + 1/p at rational points.
  CHECK(threshold_h(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(threshold_h(2.0) == doctest::Approx(17.0 / 18.0).epsilon(1e-15));
  CHECK(threshold_h(8.0) == doctest::Approx(0.47067901234567899).epsilon(1e-14));

  // At p = 3/2 the two terms are 8/25 and 2/3; their sum is 74/75.
  const double h32 = threshold_h(1.5);
  CHECK(std::abs(h32 - 74.0 / 75.0) <= 4.0 * std::abs(h32) *
                                            std::numeric_limits<double>::epsilon());
  CHECK(h32 < 1.0);

  CHECK_THROWS_AS(threshold_h(0.0), Error);
  CHECK_THROWS_AS(threshold_h(-1.0), Error);
}

TEST_CASE("threshold decreases through p = 3/2") {
  const double d = 1e-6;
  const double slope = (threshold_h(1.5 + d) - threshold_h(1.5 - d)) / (2.0 * d);
  CHECK(slope < 0.0);
}

TEST_CASE("monotonicity coefficient sign matches the threshold") {
  // alpha = h(p) is the exact boundary of nonstrict dissipation.
  CHECK(monotonicity_coefficient(1.5, 74.0 / 75.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(monotonicity_coefficient(1.5, 0.9) < 0.0);
  CHECK(monotonicity_coefficient(1.5, 0.99) > 0.0);
  CHECK(monotonicity_coefficient(2.0, 17.0 / 18.0) == doctest::Approx(0.0).epsilon(1e-14));

  Rng rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const double p = rng.uniform(0.05, 8.0);
    const double a = rng.uniform(0.0, 1.2);
    const bool dissipative = monotonicity_coefficient(p, a) <= 0.0;
    const bool below = a <= threshold_h(p) + 1e-13;
    CHECK(dissipative == below);
  }

  CHECK_THROWS_AS(monotonicity_coefficient(0.0, 0.5), Error);
}

TEST_CASE("admissible gamma postconditions") {
  SUBCASE("worked examples") {
    const ThresholdResult a = admissible_gamma(0.98);
    CHECK(a.alpha == 0.98);
    CHECK(a.p_star == doctest::Approx(1.6006).epsilon(1e-3));
    CHECK(a.gamma == doctest::Approx(0.5 * (a.p_star - 1.5)).epsilon(1e-12));
    CHECK(a.q_max == doctest::Approx(75.0 / 74.0).epsilon(1e-15));

    const ThresholdResult b = admissible_gamma(0.9);
    CHECK(b.p_star == doctest::Approx(2.4097).epsilon(1e-3));
    CHECK(b.gamma > a.gamma);
  }

  SUBCASE("postcondition h(3/2 + gamma) >= alpha on random admissible alpha") {
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
      const double alpha = rng.uniform(0.0, 74.0 / 75.0 - 1e-9);
      const ThresholdResult t = admissible_gamma(alpha);
      CHECK(t.gamma > 0.0);
      CHECK(threshold_h(1.5 + t.gamma) >= alpha);
      CHECK(t.p_star <= 8.0);
      CHECK(t.p_star > 1.5);
    }
  }

  SUBCASE("small alpha saturates the p cap") {
    const ThresholdResult t = admissible_gamma(0.0);
    CHECK(t.p_star == 8.0);
    CHECK(t.gamma == doctest::Approx(3.25).epsilon(1e-12));

    const ThresholdResult s = admissible_gamma(0.2);
    CHECK(s.p_star == 8.0);
  }

  SUBCASE("alpha just below the limit still yields a positive gamma") {
    const ThresholdResult t = admissible_gamma(74.0 / 75.0 - 1e-9);
    CHECK(t.gamma > 0.0);
    CHECK(threshold_h(1.5 + t.gamma) >= 74.0 / 75.0 - 1e-9);
  }

  SUBCASE("alpha at or above the limit is rejected") {
    CHECK_THROWS_AS(admissible_gamma(74.0 / 75.0), Error);
    CHECK_THROWS_AS(admissible_gamma(0.99), Error);
    CHECK_THROWS_AS(admissible_gamma(1.0), Error);
    CHECK_THROWS_AS(admissible_gamma(-0.1), Error);
  }
}

TEST_CASE("decay exponent range") {
  const DecayRange r = decay_q_range();
  CHECK(r.q_min_exclusive == 1.0);
  CHECK(r.q_max_inclusive == doctest::Approx(75.0 / 74.0).epsilon(1e-15));
  CHECK(r.q_max_inclusive > r.q_min_exclusive);
}
