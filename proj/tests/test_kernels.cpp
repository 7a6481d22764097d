#include <cmath>

#include "doctest.h"
#include "errors.hpp"
#include "kernels.hpp"

using namespace nlheat;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("coulomb kernel closed form, evenness, homogeneity") {
  const MatrixKernel k = MatrixKernel::coulomb();
  CHECK(k.homogeneity_degree() == -1.0);

  const Mat3 b = k.evaluate({1.0, 0.0, 0.0});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(b.m[i][j] == doctest::Approx(i == j ? 1.0 / (4.0 * pi) : 0.0).epsilon(1e-15));

  const Mat3 bm = k.evaluate({-1.0, 0.0, 0.0});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(b.m[i][j] == bm.m[i][j]);

  // Degree -1: doubling |v| halves the matrix exactly.
  const Mat3 b2 = k.evaluate({2.0, 0.0, 0.0});
  CHECK(b2.m[0][0] == doctest::Approx(0.5 * b.m[0][0]).epsilon(1e-15));

  const Vec3 v{0.3, -1.1, 0.7};
  for (double lam : {2.0, 10.0, 1.0 / 3.0}) {
    const Mat3 a = k.evaluate(v);
    const Mat3 s = k.evaluate({lam * v[0], lam * v[1], lam * v[2]});
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(s.m[i][j] == doctest::Approx(a.m[i][j] / lam).epsilon(1e-12));
  }

  CHECK_THROWS_AS(k.evaluate({0.0, 0.0, 0.0}), Error);
}

TEST_CASE("landau kernel projection structure") {
  const MatrixKernel k = MatrixKernel::landau(1.0);
  const Mat3 a = k.evaluate({1.0, 0.0, 0.0});
  const double c = 1.0 / (8.0 * pi);
  CHECK(a.m[0][0] == doctest::Approx(0.0));
  CHECK(a.m[1][1] == doctest::Approx(c).epsilon(1e-15));
  CHECK(a.m[2][2] == doctest::Approx(c).epsilon(1e-15));

  // Rank-2 projection: trace is 2 L/(8 pi |v|); the v direction is null.
  const Vec3 v{0.4, -0.2, 1.3};
  const double vn = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  const Mat3 b = k.evaluate(v);
  CHECK(b.m[0][0] + b.m[1][1] + b.m[2][2] ==
        doctest::Approx(2.0 / (8.0 * pi * vn)).epsilon(1e-13));
  double null_q = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) null_q += v[i] * b.m[i][j] * v[j];
  CHECK(std::abs(null_q) <= 1e-16);

  for (double lam : {2.0, 10.0, 1.0 / 3.0}) {
    const Mat3 s = k.evaluate({lam * v[0], lam * v[1], lam * v[2]});
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(s.m[i][j] == doctest::Approx(b.m[i][j] / lam).epsilon(1e-12));
  }

  CHECK_THROWS_AS(MatrixKernel::landau(0.0), Error);
  CHECK_THROWS_AS(MatrixKernel::landau(-2.0), Error);
  CHECK_THROWS_AS(k.evaluate({0.0, 0.0, 0.0}), Error);
}

TEST_CASE("evenness/psd sampling check") {
  const auto coulomb = check_evenness_psd(MatrixKernel::coulomb(), 2000, 7);
  CHECK(coulomb.max_evenness_violation <= 1e-14);
  CHECK(coulomb.min_quadratic_form >= -1e-14);
  CHECK(coulomb.min_quadratic_form > 0.0);  // scalar kernel is definite

  const auto landau = check_evenness_psd(MatrixKernel::landau(1.0), 2000, 7);
  CHECK(landau.max_evenness_violation <= 1e-14);
  // Projection is degenerate: the form can graze 0 but never go negative
  // beyond rounding.
  CHECK(landau.min_quadratic_form >= -1e-14);

  // A sign-flipped kernel must be flagged.
  const MatrixKernel bad = MatrixKernel::custom(
      [](const Vec3& v) {
        const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        Mat3 b{};
        b.m[0][0] = b.m[1][1] = b.m[2][2] = -1.0 / (4.0 * pi * r);
        return b;
      },
      -1.0);
  CHECK(check_evenness_psd(bad, 500, 7).min_quadratic_form < 0.0);

  CHECK_THROWS_AS(check_evenness_psd(MatrixKernel::coulomb(), 99, 7), Error);
}

TEST_CASE("evenness/psd sampling is deterministic in the seed") {
  const auto a = check_evenness_psd(MatrixKernel::landau(1.0), 500, 42);
  const auto b = check_evenness_psd(MatrixKernel::landau(1.0), 500, 42);
  CHECK(a.min_quadratic_form == b.min_quadratic_form);
  CHECK(a.max_evenness_violation == b.max_evenness_violation);
}

TEST_CASE("delta identity reproduces the bump value") {
  const GaussianBump phi{};

  SUBCASE("at the origin, both kernels, improving under refinement") {
    for (const MatrixKernel& k : {MatrixKernel::coulomb(), MatrixKernel::landau(1.0)}) {
      // Midpoint quadrature against the 1/|v| singularity is O(h^2) with
      // constant near 0.4; tolerances sit just above that envelope.
      const double coarse = check_delta_identity(k, phi, {0.0, 0.0, 0.0}, 7.0, 32);
      const double fine = check_delta_identity(k, phi, {0.0, 0.0, 0.0}, 7.0, 64);
      CHECK(std::abs(coarse - 1.0) <= 1e-1);
      CHECK(std::abs(fine - 1.0) <= 2.5e-2);
      CHECK(std::abs(fine - 1.0) <= 0.5 * std::abs(coarse - 1.0));
    }
  }

  SUBCASE("off the bump center") {
    const double v =
        check_delta_identity(MatrixKernel::coulomb(), phi, {1.0, 0.0, 0.0}, 7.0, 48);
    CHECK(std::abs(v - std::exp(-1.0)) <= 1e-2);
  }

  SUBCASE("sifting far from the bump gives zero") {
    const GaussianBump far{{4.0, 0.0, 0.0}};
    const double v =
        check_delta_identity(MatrixKernel::coulomb(), far, {-4.0, 0.0, 0.0}, 8.0, 40);
    CHECK(std::abs(v) <= 1e-3);
  }

  SUBCASE("degenerate boxes are rejected") {
    CHECK_THROWS_AS(check_delta_identity(MatrixKernel::coulomb(), phi, {0, 0, 0}, 0.0, 32),
                    Error);
    CHECK_THROWS_AS(check_delta_identity(MatrixKernel::coulomb(), phi, {0, 0, 0}, -1.0, 32),
                    Error);
    CHECK_THROWS_AS(check_delta_identity(MatrixKernel::coulomb(), phi, {0, 0, 0}, 6.0, 3),
                    Error);
  }
}
