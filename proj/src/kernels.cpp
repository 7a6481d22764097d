#include "kernels.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace nlheat {

namespace {

constexpr double pi = 3.14159265358979323846;

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

Mat3 coulomb_eval(const Vec3& v) {
  const double r = norm(v);
  const double d = 1.0 / (4.0 * pi * r);
  Mat3 b{};
  b.m[0][0] = b.m[1][1] = b.m[2][2] = d;
  return b;
}

Mat3 landau_eval(double L, const Vec3& v) {
  const double r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  const double r = std::sqrt(r2);
  const double c = L / (8.0 * pi * r);
  Mat3 b{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b.m[i][j] = c * ((i == j ? 1.0 : 0.0) - v[i] * v[j] / r2);
  return b;
}

}  // namespace

MatrixKernel MatrixKernel::coulomb() { return MatrixKernel(Kind::coulomb, 1.0, -1.0, nullptr); }

MatrixKernel MatrixKernel::landau(double L) {
  if (!std::isfinite(L) || L <= 0.0) fail(errc::invalid_argument, "landau kernel: L must be positive");
  return MatrixKernel(Kind::landau, L, -1.0, nullptr);
}

MatrixKernel MatrixKernel::custom(EvalFn fn, double homogeneity_degree) {
  if (!fn) fail(errc::invalid_argument, "custom kernel: null evaluator");
  return MatrixKernel(Kind::custom, 1.0, homogeneity_degree, std::move(fn));
}

Mat3 MatrixKernel::evaluate(const Vec3& v) const {
  const double r = norm(v);
  if (!(r > 0.0) || !std::isfinite(r))
    fail(errc::singular_point, "kernel: evaluation at the singular point v = 0");
  switch (kind_) {
    case Kind::coulomb: return coulomb_eval(v);
    case Kind::landau: return landau_eval(scale_, v);
    case Kind::custom: return fn_(v);
  }
  fail(errc::internal, "kernel: unknown kind");
}

EvennessPsdReport check_evenness_psd(const MatrixKernel& k, int n_samples, uint64_t seed) {
  if (n_samples < 100) fail(errc::invalid_argument, "evenness/psd check: need at least 100 samples");
  Rng rng(seed);
  const double lo = std::log(1e-3), hi = std::log(1e3);
  EvennessPsdReport rep{0.0, std::numeric_limits<double>::infinity()};
  for (int s = 0; s < n_samples; ++s) {
    const double r = std::exp(rng.uniform(lo, hi));
    Vec3 dir;
    double dn = 0.0;
    do {
      dir = {rng.normal(), rng.normal(), rng.normal()};
      dn = norm(dir);
    } while (dn < 1e-12);
    const Vec3 v{r * dir[0] / dn, r * dir[1] / dn, r * dir[2] / dn};
    const Vec3 mv{-v[0], -v[1], -v[2]};

    const Mat3 bp = k.evaluate(v);
    const Mat3 bm = k.evaluate(mv);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        rep.max_evenness_violation =
            std::max(rep.max_evenness_violation, std::abs(bp.m[i][j] - bm.m[i][j]));

    Vec3 xi;
    double xn = 0.0;
    do {
      xi = {rng.normal(), rng.normal(), rng.normal()};
      xn = norm(xi);
    } while (xn < 1e-12);
    double q = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) q += xi[i] * bp.m[i][j] * xi[j];
    rep.min_quadratic_form = std::min(rep.min_quadratic_form, q / (xn * xn));
  }
  return rep;
}

double GaussianBump::operator()(const Vec3& y) const {
  const double dx = y[0] - center[0], dy = y[1] - center[1], dz = y[2] - center[2];
  return std::exp(-(dx * dx + dy * dy + dz * dz));
}

Mat3 GaussianBump::hessian(const Vec3& y) const {
  const Vec3 d{y[0] - center[0], y[1] - center[1], y[2] - center[2]};
  const double phi = std::exp(-(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]));
  Mat3 h{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h.m[i][j] = phi * (4.0 * d[i] * d[j] - (i == j ? 2.0 : 0.0));
  return h;
}

double check_delta_identity(const MatrixKernel& k, const GaussianBump& phi, const Vec3& x,
                            double box_half_width, int n_per_axis) {
  if (!std::isfinite(box_half_width) || box_half_width <= 0.0)
    fail(errc::invalid_argument, "delta check: degenerate box");
  if (n_per_axis < 4) fail(errc::invalid_argument, "delta check: need at least 4 cells per axis");

  const double W = box_half_width;
  const int N = n_per_axis;
  const double h = 2.0 * W / N;
  std::vector<double> c(N);
  for (int i = 0; i < N; ++i) c[i] = -W + (i + 0.5) * h;

  // Index of the cell containing x, or -1 when x lies outside the box.
  auto cell_of = [&](double t) {
    const int i = static_cast<int>(std::floor((t + W) / h));
    return (i >= 0 && i < N) ? i : -1;
  };
  const int sx = cell_of(x[0]), sy = cell_of(x[1]), sz = cell_of(x[2]);
  const bool have_singular = sx >= 0 && sy >= 0 && sz >= 0;

  double total = 0.0;
  for (int iz = 0; iz < N; ++iz) {
    for (int iy = 0; iy < N; ++iy) {
      for (int ix = 0; ix < N; ++ix) {
        const Vec3 y{c[ix], c[iy], c[iz]};
        const Mat3 hess = phi.hessian(y);
        Mat3 b;
        if (have_singular && ix == sx && iy == sy && iz == sz) {
          // Cell average over a 5^3 sub-grid, skipping the singular point.
          Mat3 avg{};
          int used = 0;
          for (int az = 0; az < 5; ++az)
            for (int ay = 0; ay < 5; ++ay)
              for (int ax = 0; ax < 5; ++ax) {
                const Vec3 ys{c[ix] + ((ax + 0.5) / 5.0 - 0.5) * h,
                              c[iy] + ((ay + 0.5) / 5.0 - 0.5) * h,
                              c[iz] + ((az + 0.5) / 5.0 - 0.5) * h};
                const Vec3 d{x[0] - ys[0], x[1] - ys[1], x[2] - ys[2]};
                if (norm(d) < 1e-12 * h) continue;
                const Mat3 bs = k.evaluate(d);
                for (int i = 0; i < 3; ++i)
                  for (int j = 0; j < 3; ++j) avg.m[i][j] += bs.m[i][j];
                ++used;
              }
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) avg.m[i][j] /= used;
          b = avg;
        } else {
          b = k.evaluate({x[0] - y[0], x[1] - y[1], x[2] - y[2]});
        }
        double contract = 0.0;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) contract += b.m[i][j] * hess.m[i][j];
        total += contract;
      }
    }
  }
  return -total * h * h * h;
}

}  // namespace nlheat
