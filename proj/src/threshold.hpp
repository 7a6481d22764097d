#pragma once

namespace nlheat {

// h(p) = 4(p-1)/(p+1)^2 + 1/p on p > 0.  The L^p norm of a solution with
// reaction strength alpha is nonincreasing exactly when alpha <= h(p).
double threshold_h(double p);

// -(4/p) (p-1)/p + (alpha - 1/p) ((p+1)/p)^2.  Nonpositive iff alpha <= h(p);
// the two forms differ by the positive factor ((p+1)/p)^2.
double monotonicity_coefficient(double p, double alpha);

struct ThresholdResult {
  double alpha;
  double p_star;   // largest p in (3/2, 8] with h(p) >= alpha
  double gamma;    // (p_star - 3/2) / 2, strictly positive
  double q_max;    // decay range endpoint, 75/74
};

// Requires 0 <= alpha < 74/75.  h is strictly decreasing on [3/2, 8], so
// p_star is found by bisection; the returned gamma always satisfies
// h(3/2 + gamma) >= alpha.
ThresholdResult admissible_gamma(double alpha);

struct DecayRange {
  double q_min_exclusive;  // 1
  double q_max_inclusive;  // 75/74
};

DecayRange decay_q_range();

}  // namespace nlheat
