#include "threshold.hpp"

#include <cmath>

#include "errors.hpp"

namespace nlheat {

double threshold_h(double p) {
  if (!std::isfinite(p) || p <= 0.0) fail(errc::invalid_argument, "h: p must be positive");
  return 4.0 * (p - 1.0) / ((p + 1.0) * (p + 1.0)) + 1.0 / p;
}

double monotonicity_coefficient(double p, double alpha) {
  if (!std::isfinite(p) || p <= 0.0)
    fail(errc::invalid_argument, "monotonicity_coefficient: p must be positive");
  const double q = (p + 1.0) / p;
  return -(4.0 / p) * ((p - 1.0) / p) + (alpha - 1.0 / p) * q * q;
}

ThresholdResult admissible_gamma(double alpha) {
  const double limit = 74.0 / 75.0;
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha >= limit)
    fail(errc::out_of_range, "admissible_gamma: requires 0 <= alpha < 74/75");

  // h is strictly decreasing on [3/2, 8] and h(3/2) = 74/75 > alpha, so the
  // largest admissible p is either the cap or the unique root of h = alpha.
  const double p_lo = 1.5, p_cap = 8.0;
  double p_star = p_cap;
  if (threshold_h(p_cap) < alpha) {
    double lo = p_lo, hi = p_cap;
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      if (threshold_h(mid) >= alpha)
        lo = mid;
      else
        hi = mid;
    }
    p_star = lo;
  }

  double gamma = 0.5 * (p_star - p_lo);
  // Post-hoc guarantee of the defining admissibility; the halving only fires
  // when alpha sits within rounding distance of 74/75.
  while (gamma > 0.0 && threshold_h(p_lo + gamma) < alpha) gamma *= 0.5;
  if (!(gamma > 0.0))
    fail(errc::out_of_range, "admissible_gamma: alpha indistinguishable from 74/75");

  return ThresholdResult{alpha, p_star, gamma, 75.0 / 74.0};
}

DecayRange decay_q_range() { return DecayRange{1.0, 75.0 / 74.0}; }

}  // namespace nlheat
