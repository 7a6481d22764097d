#include "radial.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace nlheat {

namespace {
constexpr double four_pi = 4.0 * 3.14159265358979323846;
}

RadialGrid::RadialGrid(double r_max, int n) : r_max_(r_max), n_(n) {
  if (!std::isfinite(r_max) || r_max <= 0.0)
    fail(errc::invalid_argument, "grid: r_max must be positive and finite");
  if (n < 16) fail(errc::invalid_argument, "grid: need at least 16 cells");
  dr_ = r_max_ / n_;
  nodes_.resize(n_);
  for (int i = 0; i < n_; ++i) nodes_[i] = (i + 0.5) * dr_;
}

GridPtr make_grid(double r_max, int n) { return std::make_shared<RadialGrid>(r_max, n); }

double RadialField::max() const {
  double m = values.empty() ? 0.0 : values[0];
  for (double v : values) m = std::max(m, v);
  return m;
}

double RadialField::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

RadialField make_field(GridPtr grid, std::vector<double> values) {
  if (!grid) fail(errc::invalid_argument, "field: null grid");
  if (static_cast<int>(values.size()) != grid->size())
    fail(errc::invalid_argument, "field: value count does not match grid");
  return RadialField{std::move(grid), std::move(values)};
}

RadialField zero_field(GridPtr grid) {
  if (!grid) fail(errc::invalid_argument, "field: null grid");
  std::vector<double> v(grid->size(), 0.0);
  return RadialField{std::move(grid), std::move(v)};
}

void require_nonnegative(const RadialField& f, const char* who) {
  for (double v : f.values) {
    if (!(v >= 0.0)) fail(errc::invalid_argument, std::string(who) + ": field must be nonnegative");
  }
}

void require_same_grid(const RadialField& a, const RadialField& b, const char* who) {
  if (a.grid.get() != b.grid.get() &&
      (a.grid->size() != b.grid->size() || a.grid->r_max() != b.grid->r_max()))
    fail(errc::invalid_argument, std::string(who) + ": fields live on different grids");
}

double integrate_radial(const RadialField& f) {
  const auto& r = f.grid->nodes();
  const double dr = f.grid->spacing();
  double s = 0.0;
  for (size_t i = 0; i < r.size(); ++i) s += r[i] * r[i] * f.values[i];
  return four_pi * dr * s;
}

RadialField radial_derivative(const RadialField& f) {
  const int n = f.grid->size();
  const double dr = f.grid->spacing();
  RadialField out = zero_field(f.grid);
  const auto& v = f.values;
  // Even reflection across the axis: ghost value v[-1] = v[0].
  out.values[0] = (v[1] - v[0]) / (2.0 * dr);
  for (int i = 1; i + 1 < n; ++i) out.values[i] = (v[i + 1] - v[i - 1]) / (2.0 * dr);
  out.values[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * dr);
  return out;
}

RadialField radial_laplacian(const RadialField& f) {
  const int n = f.grid->size();
  const double dr = f.grid->spacing();
  const auto& r = f.grid->nodes();
  const auto& v = f.values;
  RadialField out = zero_field(f.grid);
  {
    const double fpp = (v[1] - v[0]) / (dr * dr);
    const double fp = (v[1] - v[0]) / (2.0 * dr);
    out.values[0] = fpp + 2.0 / r[0] * fp;
  }
  for (int i = 1; i + 1 < n; ++i) {
    const double fpp = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (dr * dr);
    const double fp = (v[i + 1] - v[i - 1]) / (2.0 * dr);
    out.values[i] = fpp + 2.0 / r[i] * fp;
  }
  {
    const double fpp = (2.0 * v[n - 1] - 5.0 * v[n - 2] + 4.0 * v[n - 3] - v[n - 4]) / (dr * dr);
    const double fp = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * dr);
    out.values[n - 1] = fpp + 2.0 / r[n - 1] * fp;
  }
  return out;
}

RadialField newton_potential(const RadialField& u) {
  require_nonnegative(u, "newton_potential");
  const int n = u.grid->size();
  const double dr = u.grid->spacing();
  const auto& r = u.grid->nodes();
  const auto& v = u.values;
  RadialField out = zero_field(u.grid);

  // inner[i] = int_0^{r_i} s^2 u ds, outer[i] = int_{r_i}^{r_max} s u ds.
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double cell = r[i] * r[i] * v[i] * dr;
    out.values[i] = (acc + 0.5 * cell) / r[i];
    acc += cell;
  }
  acc = 0.0;
  for (int i = n - 1; i >= 0; --i) {
    const double cell = r[i] * v[i] * dr;
    out.values[i] += acc + 0.5 * cell;
    acc += cell;
  }
  return out;
}

double lp_norm(const RadialField& u, double p) {
  if (!std::isfinite(p) || p <= 0.0) fail(errc::invalid_argument, "lp_norm: p must be positive");
  require_nonnegative(u, "lp_norm");
  const auto& r = u.grid->nodes();
  const double dr = u.grid->spacing();
  double s = 0.0;
  for (size_t i = 0; i < r.size(); ++i) s += r[i] * r[i] * std::pow(u.values[i], p);
  return std::pow(four_pi * dr * s, 1.0 / p);
}

RadialField pointwise_pow(const RadialField& f, double e) {
  require_nonnegative(f, "pointwise_pow");
  RadialField out = zero_field(f.grid);
  for (size_t i = 0; i < f.values.size(); ++i) out.values[i] = std::pow(f.values[i], e);
  return out;
}

}  // namespace nlheat
