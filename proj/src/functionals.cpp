#include "functionals.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "errors.hpp"

namespace nlheat {

namespace {

constexpr double pi = 3.14159265358979323846;

void check_exponent(double p, const char* who) {
  if (!std::isfinite(p) || p <= 0.0) fail(errc::invalid_argument, std::string(who) + ": p must be positive");
}

// Evaluates a radial profile at arbitrary radius: linear between nodes,
// even quadratic a + b r^2 through the first two nodes inside the first
// cell, linear decay to zero across the final half cell, zero beyond r_max.
class RadialSampler {
public:
  explicit RadialSampler(const RadialField& g)
      : v_(g.values),
        dr_(g.grid->spacing()),
        r_max_(g.grid->r_max()),
        n_(g.grid->size()) {
    const double r0 = g.grid->node(0), r1 = g.grid->node(1);
    b_ = (v_[1] - v_[0]) / (r1 * r1 - r0 * r0);
    a_ = v_[0] - b_ * r0 * r0;
  }

  double operator()(double r) const {
    const double x = r / dr_ - 0.5;
    if (x < 0.0) return std::max(0.0, a_ + b_ * r * r);
    const int i = static_cast<int>(x);
    if (i >= n_ - 1) {
      if (r >= r_max_) return 0.0;
      return v_[n_ - 1] * (r_max_ - r) / (0.5 * dr_);
    }
    const double frac = x - i;
    return v_[i] + frac * (v_[i + 1] - v_[i]);
  }

private:
  const std::vector<double>& v_;
  double dr_, r_max_;
  int n_;
  double a_, b_;
};

// Kernel-with-gradient contraction G_a b^{ab}(d) G_b, with the constant
// prefactor of the built-in kernels (1/4pi, L/8pi) stripped and, for the
// Coulomb kind, the |G|^2 factor hoisted to the caller.
template <MatrixKernel::Kind KK>
inline double contract_point(const MatrixKernel& k, double Gx, double Gy, double Gz, double G2,
                             double dx, double dy, double dz, double r2) {
  if constexpr (KK == MatrixKernel::Kind::coulomb) {
    (void)k;
    (void)Gx;
    (void)Gy;
    (void)Gz;
    (void)G2;
    (void)dx;
    (void)dy;
    (void)dz;
    return 1.0 / std::sqrt(r2);
  } else if constexpr (KK == MatrixKernel::Kind::landau) {
    (void)k;
    const double gd = Gx * dx + Gy * dy + Gz * dz;
    const double inv = 1.0 / r2;
    return (G2 - gd * gd * inv) * std::sqrt(inv);
  } else {
    const Mat3 b = k.evaluate({dx, dy, dz});
    const Vec3 G{Gx, Gy, Gz};
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += G[i] * b.m[i][j] * G[j];
    return s;
  }
}

// 5^3 sub-sampled cell average of the contraction over the cell containing
// the singularity; the central sub-point coincides with it and is skipped.
template <MatrixKernel::Kind KK>
double singular_cell_average(const MatrixKernel& k, double Gx, double Gy, double Gz, double G2,
                             double h) {
  const double tiny = 1e-12 * h;
  double acc = 0.0;
  int used = 0;
  for (int az = 0; az < 5; ++az)
    for (int ay = 0; ay < 5; ++ay)
      for (int ax = 0; ax < 5; ++ax) {
        const double dx = ((ax + 0.5) / 5.0 - 0.5) * h;
        const double dy = ((ay + 0.5) / 5.0 - 0.5) * h;
        const double dz = ((az + 0.5) / 5.0 - 0.5) * h;
        const double r2 = dx * dx + dy * dy + dz * dz;
        if (r2 < tiny * tiny) continue;
        acc += contract_point<KK>(k, Gx, Gy, Gz, G2, dx, dy, dz, r2);
        ++used;
      }
  return acc / used;
}

// Deterministic sum with four independent accumulators; the order depends
// only on n, never on data or threading.
inline double sum_fixed(const double* buf, int n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  int t = 0;
  for (; t + 4 <= n; t += 4) {
    s0 += buf[t];
    s1 += buf[t + 1];
    s2 += buf[t + 2];
    s3 += buf[t + 3];
  }
  double s = (s0 + s1) + (s2 + s3);
  for (; t < n; ++t) s += buf[t];
  return s;
}

template <MatrixKernel::Kind KK>
double convolution_total(const MatrixKernel& k, int N, const std::vector<double>& c, double h,
                         const std::vector<double>& g3, const std::vector<double>& wx,
                         const std::vector<double>& wy, const std::vector<double>& wz) {
  std::vector<double> buf(N), dxv(N), dx2v(N);
  const double* gp = g3.data();
  double total = 0.0;

  for (int iz = 0; iz < N; ++iz) {
    for (int iy = 0; iy < N; ++iy) {
      for (int ix = 0; ix < N; ++ix) {
        const size_t i = (static_cast<size_t>(iz) * N + iy) * N + ix;
        const double Gx = wx[i], Gy = wy[i], Gz = wz[i];
        const double G2 = Gx * Gx + Gy * Gy + Gz * Gz;
        if (G2 == 0.0) continue;
        for (int jx = 0; jx < N; ++jx) {
          dxv[jx] = c[ix] - c[jx];
          dx2v[jx] = dxv[jx] * dxv[jx];
        }

        double acc = 0.0;
        for (int jz = 0; jz < N; ++jz) {
          const double dz = c[iz] - c[jz];
          for (int jy = 0; jy < N; ++jy) {
            const double dy = c[iy] - c[jy];
            const double r2zy = dz * dz + dy * dy;
            const size_t row = (static_cast<size_t>(jz) * N + jy) * N;

            if (jz == iz && jy == iy) {
              for (int jx = 0; jx < N; ++jx) {
                if (jx == ix) continue;
                const double r2 = r2zy + dx2v[jx];
                acc += gp[row + jx] * contract_point<KK>(k, Gx, Gy, Gz, G2, dxv[jx], dy, dz, r2);
              }
              acc += gp[row + ix] * singular_cell_average<KK>(k, Gx, Gy, Gz, G2, h);
            } else if constexpr (KK == MatrixKernel::Kind::coulomb) {
              for (int jx = 0; jx < N; ++jx) {
                const double r2 = r2zy + dx2v[jx];
                buf[jx] = gp[row + jx] / std::sqrt(r2);
              }
              acc += sum_fixed(buf.data(), N);
            } else if constexpr (KK == MatrixKernel::Kind::landau) {
              const double gzy = Gz * dz + Gy * dy;
              for (int jx = 0; jx < N; ++jx) {
                const double r2 = r2zy + dx2v[jx];
                const double gd = gzy + Gx * dxv[jx];
                const double inv = 1.0 / r2;
                buf[jx] = gp[row + jx] * ((G2 - gd * gd * inv) * std::sqrt(inv));
              }
              acc += sum_fixed(buf.data(), N);
            } else {
              for (int jx = 0; jx < N; ++jx) {
                const double r2 = r2zy + dx2v[jx];
                acc += gp[row + jx] * contract_point<KK>(k, Gx, Gy, Gz, G2, dxv[jx], dy, dz, r2);
              }
            }
          }
        }
        if constexpr (KK == MatrixKernel::Kind::coulomb)
          total += acc * G2;
        else
          total += acc;
      }
    }
  }
  return total;
}

}  // namespace

double lhs_power_integral(const RadialField& g, double p) {
  check_exponent(p, "lhs_power_integral");
  require_nonnegative(g, "lhs_power_integral");
  return integrate_radial(pointwise_pow(g, p + 1.0));
}

double rhs_coulomb(const RadialField& g, double p) {
  check_exponent(p, "rhs_coulomb");
  require_nonnegative(g, "rhs_coulomb");
  const RadialField w = pointwise_pow(g, 0.5 * p);
  const RadialField dw = radial_derivative(w);
  const RadialField phi = newton_potential(g);
  RadialField integrand = zero_field(g.grid);
  for (size_t i = 0; i < integrand.values.size(); ++i)
    integrand.values[i] = phi.values[i] * dw.values[i] * dw.values[i];
  const double c = (p + 1.0) / p;
  return c * c * integrate_radial(integrand);
}

double rhs_matrix_kernel_3d(const RadialField& g, double p, const MatrixKernel& k,
                            const Box3& box) {
  check_exponent(p, "rhs_matrix_kernel_3d");
  require_nonnegative(g, "rhs_matrix_kernel_3d");
  if (!std::isfinite(box.half_width) || box.half_width <= 0.0)
    fail(errc::invalid_argument, "rhs_matrix_kernel_3d: degenerate box");
  if (box.n_per_axis < 4)
    fail(errc::invalid_argument, "rhs_matrix_kernel_3d: need at least 4 cells per axis");
  if (box.n_per_axis > 64)
    fail(errc::resource_guard, "rhs_matrix_kernel_3d: n_per_axis capped at 64 (O(N^6) cost)");

  const int N = box.n_per_axis;
  const double W = box.half_width;
  const double h = 2.0 * W / N;
  std::vector<double> c(N);
  for (int i = 0; i < N; ++i) c[i] = -W + (i + 0.5) * h;

  const RadialSampler sample(g);
  const size_t nn = static_cast<size_t>(N) * N * N;
  std::vector<double> g3(nn), w3(nn);
  const double half_p = 0.5 * p;
  for (int iz = 0; iz < N; ++iz)
    for (int iy = 0; iy < N; ++iy)
      for (int ix = 0; ix < N; ++ix) {
        const size_t i = (static_cast<size_t>(iz) * N + iy) * N + ix;
        const double val = sample(std::sqrt(c[ix] * c[ix] + c[iy] * c[iy] + c[iz] * c[iz]));
        g3[i] = val;
        w3[i] = std::pow(val, half_p);
      }

  // Fourth-order central differences inside (the rhs depends quadratically
  // on the gradient, so its truncation error sets the constant in front of
  // the overall O(h^2)); second-order central one cell in, one-sided second
  // order on the box faces where the samples are negligible anyway.
  std::vector<double> wx(nn), wy(nn), wz(nn);
  const auto at = [&](int iz, int iy, int ix) {
    return w3[(static_cast<size_t>(iz) * N + iy) * N + ix];
  };
  const auto diff = [&](int iz, int iy, int ix, int axis) {
    const int pos = axis == 0 ? ix : axis == 1 ? iy : iz;
    const auto get = [&](int q) {
      return axis == 0 ? at(iz, iy, q) : axis == 1 ? at(iz, q, ix) : at(q, iy, ix);
    };
    if (pos == 0) return (-3.0 * get(0) + 4.0 * get(1) - get(2)) / (2.0 * h);
    if (pos == N - 1) return (3.0 * get(N - 1) - 4.0 * get(N - 2) + get(N - 3)) / (2.0 * h);
    if (pos == 1 || pos == N - 2) return (get(pos + 1) - get(pos - 1)) / (2.0 * h);
    return (8.0 * (get(pos + 1) - get(pos - 1)) - (get(pos + 2) - get(pos - 2))) / (12.0 * h);
  };
  for (int iz = 0; iz < N; ++iz)
    for (int iy = 0; iy < N; ++iy)
      for (int ix = 0; ix < N; ++ix) {
        const size_t i = (static_cast<size_t>(iz) * N + iy) * N + ix;
        wx[i] = diff(iz, iy, ix, 0);
        wy[i] = diff(iz, iy, ix, 1);
        wz[i] = diff(iz, iy, ix, 2);
      }

  double total = 0.0;
  double kfac = 1.0;
  switch (k.kind()) {
    case MatrixKernel::Kind::coulomb:
      total = convolution_total<MatrixKernel::Kind::coulomb>(k, N, c, h, g3, wx, wy, wz);
      kfac = 1.0 / (4.0 * pi);
      break;
    case MatrixKernel::Kind::landau:
      total = convolution_total<MatrixKernel::Kind::landau>(k, N, c, h, g3, wx, wy, wz);
      kfac = k.scale() / (8.0 * pi);
      break;
    case MatrixKernel::Kind::custom:
      total = convolution_total<MatrixKernel::Kind::custom>(k, N, c, h, g3, wx, wy, wz);
      kfac = 1.0;
      break;
  }

  const double cpp = (p + 1.0) / p;
  const double h3 = h * h * h;
  return cpp * cpp * kfac * h3 * h3 * total;
}

namespace {

std::string radial_meta(const RadialField& g) {
  char s[96];
  std::snprintf(s, sizeof s, "radial n=%d r_max=%g", g.grid->size(), g.grid->r_max());
  return s;
}

FunctionalReport assemble_report(double p, double lhs, double rhs, std::string meta) {
  if (!(rhs > 0.0))
    fail(errc::degenerate_input, "inequality_ratio: rhs vanishes, ratio undefined");
  return FunctionalReport{p, lhs, rhs, lhs / rhs, std::move(meta)};
}

}  // namespace

FunctionalReport inequality_ratio(const RadialField& g, double p) {
  check_exponent(p, "inequality_ratio");
  require_nonnegative(g, "inequality_ratio");
  if (g.max() == 0.0) fail(errc::degenerate_input, "inequality_ratio: zero field");
  return assemble_report(p, lhs_power_integral(g, p), rhs_coulomb(g, p), radial_meta(g));
}

FunctionalReport inequality_ratio_3d(const RadialField& g, double p, const MatrixKernel& k,
                                     const Box3& box) {
  check_exponent(p, "inequality_ratio");
  require_nonnegative(g, "inequality_ratio");
  if (g.max() == 0.0) fail(errc::degenerate_input, "inequality_ratio: zero field");
  char s[128];
  std::snprintf(s, sizeof s, "box3d W=%g N=%d (%s)", box.half_width, box.n_per_axis,
                radial_meta(g).c_str());
  return assemble_report(p, lhs_power_integral(g, p), rhs_matrix_kernel_3d(g, p, k, box), s);
}

double maxwellian_sharpness(double p, double box_half_width, int n_per_axis) {
  if (!std::isfinite(p) || p < 1.0)
    fail(errc::invalid_argument, "maxwellian_sharpness: requires p >= 1");
  if (!std::isfinite(box_half_width) || box_half_width < 6.0)
    fail(errc::invalid_argument, "maxwellian_sharpness: box_half_width must be >= 6");

  // The 3D sampler reads radii up to the box corner, sqrt(3) W.
  const GridPtr grid = make_grid(std::sqrt(3.0) * box_half_width + 1.0, 4096);
  const RadialField mu = maxwellian_field(grid);
  const double lhs = lhs_power_integral(mu, p);
  const double rhs =
      rhs_matrix_kernel_3d(mu, p, MatrixKernel::landau(1.0), {box_half_width, n_per_axis});
  if (!(rhs > 0.0)) fail(errc::degenerate_input, "maxwellian_sharpness: rhs vanished");
  return lhs / rhs;
}

double lp_production_rate(const RadialField& u, double p, double alpha) {
  check_exponent(p, "lp_production_rate");
  require_nonnegative(u, "lp_production_rate");
  const RadialField w = pointwise_pow(u, 0.5 * p);
  const RadialField dw = radial_derivative(w);
  const RadialField phi = newton_potential(u);
  RadialField integrand = zero_field(u.grid);
  for (size_t i = 0; i < integrand.values.size(); ++i)
    integrand.values[i] = phi.values[i] * dw.values[i] * dw.values[i];
  const double dirichlet = integrate_radial(integrand);
  const double power = lhs_power_integral(u, p);
  return -4.0 * ((p - 1.0) / p) * dirichlet + (alpha * p - 1.0) * power;
}

RadialField maxwellian_field(const GridPtr& grid) {
  RadialField mu = zero_field(grid);
  const double norm = std::pow(2.0 * pi, -1.5);
  for (int i = 0; i < grid->size(); ++i) {
    const double r = grid->node(i);
    mu.values[i] = norm * std::exp(-0.5 * r * r);
  }
  return mu;
}

}  // namespace nlheat
