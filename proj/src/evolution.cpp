#include "evolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "errors.hpp"

namespace nlheat {

namespace {

// Stability ceiling inside step(); evolve() stays at or below it through
// cfl <= 1/2.
constexpr double hard_cfl = 0.5;
constexpr double reaction_eps = 1e-300;

void apply_floor(RadialField& f, double floor_value) {
  for (double& v : f.values) v = std::max(v, floor_value);
}

void check_positive_param(double v, const char* who, const char* name) {
  if (!std::isfinite(v) || v <= 0.0)
    fail(errc::invalid_argument, std::string(who) + ": " + name + " must be positive");
}

// Clamp policy shared by both RK stages: tiny undershoots are floored to 0
// and counted, anything deeper fails the run.
long clamp_negative(RadialField& f, double ref_max, const char* who) {
  const double floor_value = -1e-12 * ref_max;
  long clamped = 0;
  for (double& v : f.values) {
    if (v >= 0.0) continue;
    if (std::isnan(v)) continue;  // handled by the blowup scan
    if (v < floor_value)
      fail(errc::positivity_loss, std::string(who) + ": negative undershoot beyond tolerance");
    v = 0.0;
    ++clamped;
  }
  return clamped;
}

bool all_finite(const RadialField& f) {
  for (double v : f.values)
    if (!std::isfinite(v)) return false;
  return true;
}

double integral_u2(const RadialField& u) {
  RadialField sq = zero_field(u.grid);
  for (size_t i = 0; i < sq.values.size(); ++i) sq.values[i] = u.values[i] * u.values[i];
  return integrate_radial(sq);
}

}  // namespace

RadialField initial_gaussian(const GridPtr& grid, double amplitude, double sigma) {
  check_positive_param(amplitude, "initial_gaussian", "amplitude");
  check_positive_param(sigma, "initial_gaussian", "sigma");
  RadialField u = zero_field(grid);
  for (int i = 0; i < grid->size(); ++i) {
    const double x = grid->node(i) / sigma;
    u.values[i] = amplitude * std::exp(-x * x);
  }
  apply_floor(u, 1e-14 * amplitude);
  return u;
}

RadialField initial_smoothed_ball(const GridPtr& grid, double amplitude, double radius,
                                  double width) {
  check_positive_param(amplitude, "initial_smoothed_ball", "amplitude");
  check_positive_param(radius, "initial_smoothed_ball", "radius");
  check_positive_param(width, "initial_smoothed_ball", "width");
  RadialField u = zero_field(grid);
  for (int i = 0; i < grid->size(); ++i) {
    const double r = grid->node(i);
    u.values[i] = 0.5 * amplitude * (1.0 - std::tanh(3.0 * (r - radius) / width));
  }
  apply_floor(u, 1e-14 * amplitude);
  return u;
}

RadialField initial_power_tail(const GridPtr& grid, double amplitude, double s) {
  check_positive_param(amplitude, "initial_power_tail", "amplitude");
  // Mass integral needs r^2 (1+r^2)^{-s} integrable: s > 3/2.
  if (!std::isfinite(s) || s <= 1.5)
    fail(errc::invalid_argument, "initial_power_tail: s must exceed 3/2 for integrable mass");
  RadialField u = zero_field(grid);
  for (int i = 0; i < grid->size(); ++i) {
    const double r = grid->node(i);
    u.values[i] = amplitude * std::pow(1.0 + r * r, -s);
  }
  apply_floor(u, 1e-14 * amplitude);
  return u;
}

RadialField rhs_model(const RadialField& u, double alpha) {
  require_nonnegative(u, "rhs_model");
  const RadialField phi = newton_potential(u);
  const RadialField lap = radial_laplacian(u);
  RadialField out = zero_field(u.grid);
  for (size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = phi.values[i] * lap.values[i] + alpha * u.values[i] * u.values[i];
  return out;
}

StepResult step(const RadialField& u, double alpha, double dt) {
  require_nonnegative(u, "step");
  if (!std::isfinite(dt) || dt <= 0.0) fail(errc::step_size, "step: dt must be positive");

  const double dr = u.grid->spacing();
  const RadialField phi = newton_potential(u);
  const double diffusion_limit = hard_cfl * dr * dr / std::max(phi.max(), reaction_eps);
  const double reaction_limit = hard_cfl / (alpha * u.max() + reaction_eps);
  if (dt > std::min(diffusion_limit, reaction_limit) * (1.0 + 1e-9))
    fail(errc::step_size, "step: dt violates the stability bound");

  const double ref_max = u.max();
  const RadialField lap = radial_laplacian(u);
  const int n = u.grid->size();
  long clamped = 0;

  RadialField stage = zero_field(u.grid);
  for (int i = 0; i < n; ++i) {
    const double k1 = phi.values[i] * lap.values[i] + alpha * u.values[i] * u.values[i];
    stage.values[i] = u.values[i] + dt * k1;
  }
  if (!all_finite(stage)) fail(errc::blowup, "step: non-finite intermediate state");
  clamped += clamp_negative(stage, ref_max, "step");

  const RadialField phi1 = newton_potential(stage);
  const RadialField lap1 = radial_laplacian(stage);
  RadialField out = zero_field(u.grid);
  for (int i = 0; i < n; ++i) {
    const double k1 = phi.values[i] * lap.values[i] + alpha * u.values[i] * u.values[i];
    const double k2 =
        phi1.values[i] * lap1.values[i] + alpha * stage.values[i] * stage.values[i];
    out.values[i] = u.values[i] + 0.5 * dt * (k1 + k2);
  }
  if (!all_finite(out)) fail(errc::blowup, "step: non-finite state");
  clamped += clamp_negative(out, ref_max, "step");
  return StepResult{std::move(out), clamped};
}

EvolutionSeries evolve(const RadialField& u0, const EvolutionConfig& cfg) {
  require_nonnegative(u0, "evolve");
  if (!std::isfinite(cfg.t_end) || cfg.t_end <= 0.0)
    fail(errc::invalid_argument, "evolve: t_end must be positive");
  if (!std::isfinite(cfg.cfl) || cfg.cfl <= 0.0 || cfg.cfl > 0.5)
    fail(errc::invalid_argument, "evolve: cfl must lie in (0, 1/2]");
  if (!std::isfinite(cfg.alpha) || cfg.alpha < 0.0)
    fail(errc::invalid_argument, "evolve: alpha must be nonnegative");
  if (cfg.max_steps <= 0) fail(errc::invalid_argument, "evolve: max_steps must be positive");
  for (double p : cfg.diag_ps)
    if (!std::isfinite(p) || p <= 0.0)
      fail(errc::invalid_argument, "evolve: tracked exponents must be positive");

  const double record_interval =
      cfg.record_interval > 0.0 ? cfg.record_interval : cfg.t_end / 200.0;
  const int n = u0.grid->size();

  EvolutionSeries series;
  series.tracked_ps = cfg.diag_ps;
  series.lp.resize(cfg.diag_ps.size());

  const double initial_max = u0.max();
  const auto check_boundary = [&](const RadialField& u) {
    const double m = u.max();
    if (m > 0.0 && u.values[n - 1] > 1e-8 * m)
      fail(errc::boundary_breach, "evolve: solution reached r_max (truncation no longer inert)");
  };
  check_boundary(u0);

  double acc_l2 = 0.0;
  const auto record = [&](double t, const RadialField& u) {
    series.times.push_back(t);
    series.mass.push_back(integrate_radial(u));
    series.l2sq.push_back(integral_u2(u));
    series.accumulated_l2.push_back(acc_l2);
    series.max_u.push_back(u.max());
    for (size_t k = 0; k < cfg.diag_ps.size(); ++k)
      series.lp[k].push_back(lp_norm(u, cfg.diag_ps[k]));
  };

  RadialField u = u0;
  double t = 0.0;
  record(t, u);
  double next_record = record_interval;
  const double dr = u.grid->spacing();
  const double time_tol = 1e-12 * cfg.t_end;

  while (t < cfg.t_end - time_tol) {
    if (series.steps >= cfg.max_steps)
      fail(errc::resource_guard, "evolve: step budget exhausted");

    const RadialField phi = newton_potential(u);
    const double diffusion_limit =
        cfg.cfl * dr * dr / std::max(phi.max(), reaction_eps);
    const double reaction_limit = cfg.cfl / (cfg.alpha * u.max() + reaction_eps);
    double dt = std::min(diffusion_limit, reaction_limit);
    dt = std::min(dt, cfg.t_end - t);
    dt = std::min(dt, next_record - t);
    if (!(dt > 0.0)) fail(errc::internal, "evolve: nonpositive time step");

    const double l2_before = integral_u2(u);
    StepResult sr{zero_field(u.grid), 0};
    try {
      sr = step(u, cfg.alpha, dt);
    } catch (const Error& e) {
      if (e.code() == errc::blowup) {
        series.blowup = true;
        series.blowup_time = t + dt;
        break;
      }
      throw;
    }
    ++series.steps;
    series.node_steps += n;
    series.clamp_count += sr.clamped;
    t += dt;

    acc_l2 += 0.5 * dt * (l2_before + integral_u2(sr.u));
    u = std::move(sr.u);

    if (u.max() > 1e12 * initial_max) {
      series.blowup = true;
      series.blowup_time = t;
      break;
    }
    check_boundary(u);

    // Watched diagnostic: how far u drifts from non-increasing in r.
    const double m = u.max();
    if (m > 0.0) {
      for (int i = 0; i + 1 < n; ++i)
        series.radial_uptick =
            std::max(series.radial_uptick, (u.values[i + 1] - u.values[i]) / m);
    }

    if (t >= next_record - time_tol) {
      record(t, u);
      while (next_record <= t + time_tol) next_record += record_interval;
    }
  }

  if (!series.blowup && (series.times.empty() || series.times.back() < t - time_tol))
    record(t, u);
  return series;
}

double conservation_residual(const EvolutionSeries& s, double alpha) {
  if (s.times.empty()) fail(errc::invalid_argument, "conservation_residual: empty series");
  const double m0 = s.mass.front();
  if (m0 == 0.0) return 0.0;
  double worst = 0.0;
  for (size_t k = 0; k < s.times.size(); ++k) {
    const double defect = s.mass[k] + (1.0 - alpha) * s.accumulated_l2[k] - m0;
    worst = std::max(worst, std::abs(defect) / m0);
  }
  return worst;
}

double monotonicity_report(const EvolutionSeries& s, double p) {
  if (s.times.empty()) fail(errc::invalid_argument, "monotonicity_report: empty series");
  for (size_t k = 0; k < s.tracked_ps.size(); ++k) {
    if (std::abs(s.tracked_ps[k] - p) <= 1e-12 * std::max(1.0, std::abs(p))) {
      const double base = s.lp[k].front();
      if (base == 0.0) return 0.0;
      double worst = -std::numeric_limits<double>::infinity();
      for (double v : s.lp[k]) worst = std::max(worst, (v - base) / base);
      return worst;
    }
  }
  fail(errc::invalid_argument, "monotonicity_report: exponent was not tracked");
}

std::string series_to_csv(const EvolutionSeries& s) {
  std::string out = "t,mass,l2sq,accumulated_l2,max_u";
  char buf[64];
  for (double p : s.tracked_ps) {
    std::snprintf(buf, sizeof buf, ",lp_%.12g", p);
    out += buf;
  }
  out += '\n';
  for (size_t k = 0; k < s.times.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", s.times[k]);
    out += buf;
    const double row[4] = {s.mass[k], s.l2sq[k], s.accumulated_l2[k], s.max_u[k]};
    for (double v : row) {
      std::snprintf(buf, sizeof buf, ",%.17g", v);
      out += buf;
    }
    for (const auto& lp : s.lp) {
      std::snprintf(buf, sizeof buf, ",%.17g", lp[k]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace nlheat
