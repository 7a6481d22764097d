#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace nlheat {

using Vec3 = std::array<double, 3>;

struct Mat3 {
  double m[3][3];
};

// Matrix-valued convolution kernel b^{ij}(v), singular at v = 0 and
// homogeneous of a fixed negative degree.  Built-in kinds:
//   coulomb:  delta_ij / (4 pi |v|)
//   landau:   (L / (8 pi |v|)) (delta_ij - v_i v_j / |v|^2)
// Both are even, positive semidefinite away from the origin, and satisfy
// -d_i d_j b^{ij} = delta_0 (Landau with L = 1).
class MatrixKernel {
public:
  enum class Kind { coulomb, landau, custom };
  using EvalFn = std::function<Mat3(const Vec3&)>;

  static MatrixKernel coulomb();
  static MatrixKernel landau(double L);
  static MatrixKernel custom(EvalFn fn, double homogeneity_degree);

  Mat3 evaluate(const Vec3& v) const;
  double homogeneity_degree() const { return degree_; }
  Kind kind() const { return kind_; }
  double scale() const { return scale_; }

private:
  MatrixKernel(Kind kind, double scale, double degree, EvalFn fn)
      : kind_(kind), scale_(scale), degree_(degree), fn_(std::move(fn)) {}

  Kind kind_;
  double scale_;
  double degree_;
  EvalFn fn_;
};

struct EvennessPsdReport {
  double max_evenness_violation;   // max entrywise |b(v) - b(-v)|
  double min_quadratic_form;       // min of xi.b(v).xi / |xi|^2 over samples
};

// Samples |v| log-uniformly over [1e-3, 1e3] with random directions.
// Requires n_samples >= 100.
EvennessPsdReport check_evenness_psd(const MatrixKernel& k, int n_samples, uint64_t seed);

// Unit-width Gaussian bump centred at c: phi(y) = exp(-|y - c|^2).
struct GaussianBump {
  Vec3 center{0.0, 0.0, 0.0};
  double operator()(const Vec3& y) const;
  Mat3 hessian(const Vec3& y) const;
};

// Quadrature value of -int b^{ij}(x - y) d_i d_j phi(y) dy over the box
// [-W, W]^3 with n_per_axis midpoint cells per axis; converges to phi(x)
// when the kernel satisfies the distributional identity.  The cell
// containing y = x uses a 5^3 sub-sampled cell average of the kernel.
double check_delta_identity(const MatrixKernel& k, const GaussianBump& phi, const Vec3& x,
                            double box_half_width, int n_per_axis);

}  // namespace nlheat
