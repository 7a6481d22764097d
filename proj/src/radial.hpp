#pragma once

#include <memory>
#include <vector>

namespace nlheat {

// Cell-centered uniform grid on (0, r_max]: r_i = (i + 1/2) dr with
// dr = r_max / n.  No node sits at r = 0, so radial stencils never divide
// by zero, and the midpoint quadrature rule needs no axis correction.
class RadialGrid {
public:
  RadialGrid(double r_max, int n);

  double r_max() const { return r_max_; }
  int size() const { return n_; }
  double spacing() const { return dr_; }
  double node(int i) const { return nodes_[i]; }
  const std::vector<double>& nodes() const { return nodes_; }

private:
  double r_max_;
  int n_;
  double dr_;
  std::vector<double> nodes_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

GridPtr make_grid(double r_max, int n);

// Radial profile sampled at the grid nodes.  Density fields are nonnegative;
// operator outputs (derivatives, Laplacians) may carry any sign, so the
// nonnegativity contract is checked by the operations that need it.
struct RadialField {
  GridPtr grid;
  std::vector<double> values;

  double max() const;
  double max_abs() const;
};

RadialField make_field(GridPtr grid, std::vector<double> values);
RadialField zero_field(GridPtr grid);

void require_nonnegative(const RadialField& f, const char* who);
void require_same_grid(const RadialField& a, const RadialField& b, const char* who);

// Integral over R^3 of the radial profile: sum of 4 pi r^2 f dr.
double integrate_radial(const RadialField& f);

// d/dr, second order: even reflection across r = 0 at the first node,
// one-sided 3-point stencil at the outer boundary.
RadialField radial_derivative(const RadialField& f);

// f'' + (2/r) f', same boundary closures as radial_derivative.
RadialField radial_laplacian(const RadialField& f);

// (-Laplace)^{-1} u for u >= 0, vanishing at infinity with the tail beyond
// r_max treated as zero:
//   phi(r) = (1/r) int_0^r s^2 u ds + int_r^{r_max} s u ds.
// Split quadrature: full midpoint cells strictly inside each range plus half
// a cell at r itself, so phi is the exact piecewise-linear-in-cell potential
// of the midpoint masses.
RadialField newton_potential(const RadialField& u);

// (int u^p dx)^{1/p} for u >= 0, p > 0.
double lp_norm(const RadialField& u, double p);

// Pointwise power of a nonnegative field.
RadialField pointwise_pow(const RadialField& f, double e);

}  // namespace nlheat
