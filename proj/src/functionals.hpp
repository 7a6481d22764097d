#pragma once

#include <string>

#include "kernels.hpp"
#include "radial.hpp"

namespace nlheat {

// Both sides of the power-integral inequality
//   int g^{p+1} <= ((p+1)/p)^2 int (b^{ij} * g) d_i g^{p/2} d_j g^{p/2}
// and their ratio for one exponent p.
struct FunctionalReport {
  double p;
  double lhs;
  double rhs;
  double ratio;            // lhs / rhs, defined only when rhs > 0
  std::string grid_meta;
};

// int g^{p+1} dx for g >= 0, p > 0.
double lhs_power_integral(const RadialField& g, double p);

// Fast radial path for the scalar Coulomb kernel:
//   ((p+1)/p)^2 int newton_potential(g) |d_r g^{p/2}|^2 dx.
// The power is taken pointwise before differencing so that g -> 0 regions
// never evaluate g^{p/2-1}.
double rhs_coulomb(const RadialField& g, double p);

struct Box3 {
  double half_width;
  int n_per_axis;
};

// Generic 3D path: samples the radial profile onto a midpoint tensor grid
// over [-W, W]^3, forms (b^{ij} * g) by direct quadrature (singular cell via
// 5^3 sub-sampled cell average), contracts with central-difference gradients
// of g^{p/2}, and integrates.  Cost O(n_per_axis^6); capped at 64 cells per
// axis.  Deterministic: fixed summation order, no threading.
double rhs_matrix_kernel_3d(const RadialField& g, double p, const MatrixKernel& k,
                            const Box3& box);

FunctionalReport inequality_ratio(const RadialField& g, double p);
FunctionalReport inequality_ratio_3d(const RadialField& g, double p, const MatrixKernel& k,
                                     const Box3& box);

// lhs/rhs for the Maxwellian mu = (2 pi)^{-3/2} exp(-|v|^2/2) with the
// Landau kernel at L = 1; the continuum ratio equals 1 exactly at p = 1.
// Requires p >= 1 and box_half_width >= 6.
double maxwellian_sharpness(double p, double box_half_width, int n_per_axis);

// Predicted d/dt int u^p along the flow:
//   -4 ((p-1)/p) int (G*u) |d_r u^{p/2}|^2 + (alpha p - 1) int u^{p+1}.
double lp_production_rate(const RadialField& u, double p, double alpha);

RadialField maxwellian_field(const GridPtr& grid);

}  // namespace nlheat
