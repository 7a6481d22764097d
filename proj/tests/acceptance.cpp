// Acceptance gate: one labelled line per criterion, every tolerance pinned
// here in code.  Exit status is the number of failed criteria.
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "errors.hpp"
#include "evolution.hpp"
#include "functionals.hpp"
#include "kernels.hpp"
#include "radial.hpp"
#include "random_fields.hpp"
#include "rng.hpp"
#include "threshold.hpp"

using namespace nlheat;

namespace {

constexpr double pi = 3.14159265358979323846;

int failures = 0;

void report(const char* id, const char* name, bool ok, const std::string& detail) {
  std::printf("%-12s %-44s %s  %s\n", id, name, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

// 1. Threshold exactness at rational points.
void criterion_threshold_exactness() {
  const double e32 = std::abs(threshold_h(1.5) - 74.0 / 75.0);
  const double e1 = std::abs(threshold_h(1.0) - 1.0);
  const double e2 = std::abs(threshold_h(2.0) - 17.0 / 18.0);
  const bool ok = e32 <= 1e-15 && e1 == 0.0 && e2 <= 1e-15;
  report("criterion 1", "threshold exactness h(3/2)=74/75",
         ok, fmt("|err|: h(3/2) %.2e, h(1) %.2e, h(2) %.2e", e32, e1, e2));
}

// 2. Sign of the monotonicity coefficient == threshold comparison.
void criterion_equivalence() {
  Rng rng(20250819);
  long mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    const double p = 8.0 * (1.0 - rng.uniform());  // (0, 8]
    const double a = rng.uniform(0.0, 1.2);
    const bool dissipative = monotonicity_coefficient(p, a) <= 0.0;
    const bool below = a <= threshold_h(p);
    if (dissipative != below) ++mismatches;
  }
  report("criterion 2", "coefficient sign equivalence, 10^4 samples",
         mismatches == 0, fmt("mismatches = %ld", mismatches));
}

// 3. Randomized inequality suite on the Coulomb kernel.
void criterion_inequality_suite() {
  const double ps[5] = {0.5, 1.0, 1.5, 2.0, 3.0};
  double overshoot[2] = {0.0, 0.0};
  double worst[2] = {0.0, 0.0};
  const int ns[2] = {2048, 4096};
  for (int k = 0; k < 2; ++k) {
    const GridPtr grid = make_grid(40.0, ns[k]);
    for (int idx = 0; idx < 25; ++idx) {
      const RadialField g = suite_field(grid, 1, idx);
      for (double p : ps) {
        const double r = inequality_ratio(g, p).ratio;
        if (r - 1.0 > overshoot[k]) overshoot[k] = r - 1.0;
        if (r > worst[k]) worst[k] = r;
      }
    }
  }
  const bool below = worst[0] <= 1.0 + 1e-3;
  const bool halves = overshoot[1] <= 0.5 * overshoot[0] + 1e-12;
  report("criterion 3", "inequality suite 25x5, n=2048 -> 4096",
         below && halves,
         fmt("max ratio %.6f, overshoot %.2e -> %.2e", worst[0], overshoot[0], overshoot[1]));
}

// 4. Amplitude and dilation invariance of the ratio.
void criterion_scale_invariance() {
  const GridPtr grid = make_grid(20.0, 1024);
  RadialField g = zero_field(grid);
  for (int i = 0; i < grid->size(); ++i) {
    const double r = grid->node(i);
    g.values[i] = std::exp(-r * r);
  }
  RadialField g7 = g;
  for (double& v : g7.values) v *= 7.0;
  double amp_dev = 0.0;
  for (double p : {0.5, 1.0, 2.0}) {
    const double a = inequality_ratio(g, p).ratio;
    const double b = inequality_ratio(g7, p).ratio;
    amp_dev = std::max(amp_dev, std::abs(b - a) / a);
  }

  const GridPtr grid2 = make_grid(40.0, 1024);
  RadialField gd = zero_field(grid2);
  for (int i = 0; i < grid2->size(); ++i) {
    const double r = grid2->node(i) / 2.0;
    gd.values[i] = std::exp(-r * r);
  }
  double dil_dev = 0.0;
  for (double p : {1.0, 2.0}) {
    const double a = inequality_ratio(g, p).ratio;
    const double b = inequality_ratio(gd, p).ratio;
    dil_dev = std::max(dil_dev, std::abs(b - a) / a);
  }
  const bool ok = amp_dev <= 1e-12 && dil_dev <= 1e-12;
  report("criterion 4", "scale invariance lambda=7, dilation R=2",
         ok, fmt("amplitude dev %.2e, dilation dev %.2e", amp_dev, dil_dev));
}

// 5. Maxwellian sharpness of the Landau inequality at p = 1.
void criterion_maxwellian_sharpness() {
  const double r32 = maxwellian_sharpness(1.0, 6.0, 32);
  const double r48 = maxwellian_sharpness(1.0, 6.0, 48);
  const double r64 = maxwellian_sharpness(1.0, 6.0, 64);
  const bool window = r48 >= 0.95 && r48 <= 1.02;
  const bool trend = std::abs(r48 - 1.0) < std::abs(r32 - 1.0) &&
                     std::abs(r64 - 1.0) < std::abs(r48 - 1.0);

  const GridPtr grid = make_grid(12.0, 2048);
  const double mu2 = lhs_power_integral(maxwellian_field(grid), 1.0);
  const double mu2_exact = std::pow(4.0 * pi, -1.5);
  const bool norm_ok = std::abs(mu2 / mu2_exact - 1.0) <= 1e-2;

  report("criterion 5", "maxwellian sharpness, landau p=1",
         window && trend && norm_ok,
         fmt("ratio 32/48/64 = %.5f/%.5f/%.5f, int mu^2 rel err %.1e",
             r32, r48, r64, std::abs(mu2 / mu2_exact - 1.0)));
}

// 6. Distributional delta identity for both kernels.
void criterion_delta_identity() {
  const GaussianBump phi{};
  const Vec3 xs[2] = {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
  double worst128 = 0.0;
  bool improving = true;
  for (const MatrixKernel& k : {MatrixKernel::coulomb(), MatrixKernel::landau(1.0)}) {
    for (const Vec3& x : xs) {
      const double target = phi(x);
      const double e64 = std::abs(check_delta_identity(k, phi, x, 7.0, 64) - target);
      const double e128 = std::abs(check_delta_identity(k, phi, x, 7.0, 128) - target);
      worst128 = std::max(worst128, e128);
      if (e128 >= e64) improving = false;
    }
  }
  report("criterion 6", "delta identity, both kernels, x in {0, e1}",
         worst128 <= 1e-2 && improving,
         fmt("max |err| at N=128: %.2e, refinement improves: %s", worst128,
             improving ? "yes" : "no"));
}

// 7. Conservation law along the flow.
void criterion_conservation() {
  EvolutionConfig cfg;
  cfg.t_end = 0.5;
  cfg.cfl = 0.25;
  cfg.record_interval = 0.05;

  const auto run = [&](double alpha, int n) {
    const GridPtr grid = make_grid(8.0, n);
    cfg.alpha = alpha;
    const EvolutionSeries s = evolve(initial_gaussian(grid, 1.0, 1.0), cfg);
    return conservation_residual(s, alpha);
  };

  const double r_mass = run(1.0, 1024);
  const double r_full = run(0.5, 1024);
  const double r_fine = run(0.5, 2048);
  const bool ok = r_mass <= 1e-3 && r_full <= 1e-3 && r_fine <= 0.5 * r_full;
  report("criterion 7", "conservation residuals, refinement halving",
         ok, fmt("alpha=1: %.2e, alpha=1/2: %.2e -> %.2e at n=2048", r_mass, r_full, r_fine));
}

// 8. Production identity against a centred finite difference.
void criterion_production_identity() {
  const GridPtr grid = make_grid(8.0, 1024);
  const RadialField u0 = initial_gaussian(grid, 1.0, 1.0);
  const double alpha = 0.5, dt = 1e-5;
  const RadialField u1 = step(u0, alpha, dt).u;
  const RadialField u2 = step(u1, alpha, dt).u;
  double worst = 0.0;
  for (double p : {1.5, 2.0}) {
    const double f0 = lhs_power_integral(u0, p - 1.0);  // int u^p
    const double f2 = lhs_power_integral(u2, p - 1.0);
    const double fd = (f2 - f0) / (2.0 * dt);
    const double rate = lp_production_rate(u1, p, alpha);
    worst = std::max(worst, std::abs(fd - rate) / std::abs(rate));
  }
  report("criterion 8", "L^p production identity, p in {3/2, 2}",
         worst <= 1e-2, fmt("max relative gap %.2e", worst));
}

// 9. L^p monotonicity at the admissible exponent.
void criterion_monotonicity() {
  bool ok = true;
  std::string detail;
  for (double alpha : {0.9, 0.98}) {
    const ThresholdResult t = admissible_gamma(alpha);
    const double p = 1.5 + t.gamma;
    EvolutionConfig cfg;
    cfg.alpha = alpha;
    cfg.t_end = 0.5;
    cfg.cfl = 0.25;
    cfg.record_interval = 0.05;
    cfg.diag_ps = {p, 75.0 / 74.0};
    const GridPtr grid = make_grid(8.0, 512);
    const EvolutionSeries s = evolve(initial_gaussian(grid, 1.0, 1.0), cfg);
    const double uptick = monotonicity_report(s, p);
    const bool decays = s.lp[1].back() < s.lp[1].front();
    ok = ok && uptick <= 1e-6 && decays;
    detail += fmt("a=%.2f: uptick %.1e, L^{75/74} %+.1e; ", alpha, uptick,
                  s.lp[1].back() - s.lp[1].front());
  }
  report("criterion 9", "monotonicity at p = 3/2 + gamma", ok, detail);
}

// 10. Newton potential closed forms.
void criterion_newton_closed_forms() {
  const GridPtr bg = make_grid(2.0, 4096);  // ball edge r=1 on a cell boundary
  RadialField ball = zero_field(bg);
  for (int i = 0; i < bg->size(); ++i) ball.values[i] = bg->node(i) < 1.0 ? 1.0 : 0.0;
  const RadialField pb = newton_potential(ball);
  double e_ball = 0.0;
  for (int i = 0; i < bg->size(); ++i) {
    const double r = bg->node(i);
    const double exact = r < 1.0 ? 0.5 - r * r / 6.0 : 1.0 / (3.0 * r);
    e_ball = std::max(e_ball, std::abs(pb.values[i] - exact));
  }

  const GridPtr gg = make_grid(12.0, 4096);
  RadialField gauss = zero_field(gg);
  for (int i = 0; i < gg->size(); ++i) {
    const double r = gg->node(i);
    gauss.values[i] = std::exp(-r * r);
  }
  const RadialField pg = newton_potential(gauss);
  double e_gauss = 0.0;
  for (int i = 0; i < gg->size(); ++i) {
    const double r = gg->node(i);
    const double exact = 0.25 * std::sqrt(pi) * std::erf(r) / r;
    e_gauss = std::max(e_gauss, std::abs(pg.values[i] - exact));
  }

  const bool ok = e_ball <= 1e-4 && e_gauss <= 1e-4;
  report("criterion 10", "newton potential closed forms, n=4096",
         ok, fmt("max |err|: ball %.2e, gaussian %.2e", e_ball, e_gauss));
}

// Cross-route check tying the radial fast path to the 3D quadrature.
void property_dual_route() {
  const GridPtr grid = make_grid(8.0, 1024);
  RadialField g = zero_field(grid);
  for (int i = 0; i < grid->size(); ++i) {
    const double r = grid->node(i);
    g.values[i] = std::exp(-r * r);
  }
  const double radial = rhs_coulomb(g, 2.0);
  const double c48 = rhs_matrix_kernel_3d(g, 2.0, MatrixKernel::coulomb(), {6.0, 48});
  const double rel = std::abs(c48 / radial - 1.0);
  report("property", "radial vs 3d coulomb route, N=48",
         rel <= 5e-2, fmt("relative gap %.2e", rel));
}

}  // namespace

int main() {
  try {
    criterion_threshold_exactness();
    criterion_equivalence();
    criterion_inequality_suite();
    criterion_scale_invariance();
    criterion_maxwellian_sharpness();
    criterion_delta_identity();
    criterion_conservation();
    criterion_production_identity();
    criterion_monotonicity();
    criterion_newton_closed_forms();
    property_dual_route();
  } catch (const Error& e) {
    std::printf("unexpected library error: %s\n", e.what());
    return 99;
  }
  std::printf("%s: %d/11 checks passed\n", failures == 0 ? "ACCEPTED" : "REJECTED",
              11 - failures);
  return failures;
}
