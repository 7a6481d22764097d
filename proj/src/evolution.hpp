#pragma once

#include <string>
#include <vector>

#include "radial.hpp"

namespace nlheat {

struct EvolutionConfig {
  double alpha = 1.0;
  double t_end = 0.5;
  double cfl = 0.25;               // time-step safety factor in (0, 1/2]
  double record_interval = 0.0;    // <= 0 means t_end / 200
  std::vector<double> diag_ps;     // exponents tracked as lp_<p> columns
  long max_steps = 10'000'000;     // resource guard
};

struct EvolutionSeries {
  std::vector<double> times;
  std::vector<double> mass;
  std::vector<double> l2sq;
  std::vector<double> accumulated_l2;  // trapezoid accumulation of int_0^t int u^2
  std::vector<double> max_u;
  std::vector<double> tracked_ps;
  std::vector<std::vector<double>> lp;  // lp[k][record], one row per tracked p

  bool blowup = false;
  double blowup_time = 0.0;

  long clamp_count = 0;   // nodes floored to 0 from tiny negative undershoots
  long node_steps = 0;    // grid size x accepted steps, denominator for clamp rate
  long steps = 0;

  // Watched, not asserted: largest relative increase of u across adjacent
  // nodes seen over the run (0 when u stays non-increasing in r).
  double radial_uptick = 0.0;
};

RadialField initial_gaussian(const GridPtr& grid, double amplitude, double sigma);
RadialField initial_smoothed_ball(const GridPtr& grid, double amplitude, double radius,
                                  double width);
RadialField initial_power_tail(const GridPtr& grid, double amplitude, double s);

// newton_potential(u) * radial_laplacian(u) + alpha * u^2.
RadialField rhs_model(const RadialField& u, double alpha);

struct StepResult {
  RadialField u;
  long clamped;
};

// One explicit RK2 (Heun) step.  Requires dt within both stability bounds
// dt <= (1/2) dr^2 / max(G*u) and dt <= (1/2) / (alpha max(u) + eps).
// Negative undershoots below -1e-12 max(u) abort with positivity-loss;
// values in [-1e-12 max(u), 0) are clamped to 0 and counted.  NaN/Inf in
// the result raises the blowup signal.
StepResult step(const RadialField& u, double alpha, double dt);

// Adaptive explicit stepping to t_end or until blowup is detected; the
// returned series carries the blowup flag and hit time, with records up to
// the last finite state.  Blowup by amplitude means max u > 1e12 x initial
// max.  Aborts (boundary-breach) if u(r_max) ever exceeds 1e-8 max(u).
EvolutionSeries evolve(const RadialField& u0, const EvolutionConfig& cfg);

// max over recorded t of |mass(t) + (1-alpha) accumulated_l2(t) - mass(0)|
// normalized by mass(0); 0 for the zero solution.
double conservation_residual(const EvolutionSeries& s, double alpha);

// max over recorded t of (lp(t) - lp(0)) / lp(0) for a tracked exponent;
// nonpositive when the norm never rises.
double monotonicity_report(const EvolutionSeries& s, double p);

// CSV with columns t, mass, l2sq, accumulated_l2, max_u, lp_<p>...
std::string series_to_csv(const EvolutionSeries& s);

}  // namespace nlheat
