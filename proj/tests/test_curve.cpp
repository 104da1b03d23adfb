#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "prasymp/asymptotics.hpp"
#include "prasymp/curve.hpp"
#include "prasymp/parallel.hpp"
#include "support.hpp"

using namespace prasymp;
using testsup::rng;

TEST_CASE("residual closed form on the negative real axis") {
  const double s5 = std::sqrt(5.0);
  double want = 2.0 * s5 + std::log((-1.0 + s5) / (1.0 + s5));
  CHECK(gamma_residual(1.0, Complex(-1.0, 0.0)) == doctest::Approx(want).epsilon(1e-12));
  CHECK(gamma_residual(1.0, Complex(-1.0, 0.0)) == doctest::Approx(3.5097).epsilon(1e-3));
  CHECK(gamma_residual(1.0, Complex(-1.0, 0.0)) > 0.0);
}

TEST_CASE("residual is conjugate symmetric") {
  auto g = rng(41);
  for (int i = 0; i < 200; ++i) {
    Complex z = testsup::box(g, -6.0, -0.05, 0.05, 4.0);
    double up = gamma_residual(1.7, z);
    double dn = gamma_residual(1.7, std::conj(z));
    CHECK(std::abs(up - dn) <= 1e-13 * (1.0 + std::abs(up)));
  }
}

TEST_CASE("residual is undefined exactly at the curve endpoints") {
  CHECK_THROWS_AS(gamma_residual(1.0, Complex(0.0, 2.0)), SingularError);
  CHECK_THROWS_AS(gamma_residual(0.25, Complex(0.0, -1.0)), SingularError);
}

TEST_CASE("junction root and its scaling law") {
  double z1 = solve_zA(1.0);
  CHECK(z1 > -3.1);
  CHECK(z1 < -2.9);
  CHECK(std::abs(solve_zA(4.0) - 2.0 * z1) < 1e-10);
  for (double A : {0.25, 1.0, 4.0})
    CHECK(std::abs(gamma_residual(A, Complex(solve_zA(A), 0.0))) < 1e-12);
}

TEST_CASE("traced curve certificates and geometry") {
  CurvePolyline c = trace_gamma(1.0, 128, 1e-10);
  const size_t m = c.points.size();
  REQUIRE(m == 2 * 128 - 1);
  REQUIRE(c.residuals.size() == m);

  CHECK(std::abs(c.points.front() - Complex(0.0, 2.0)) < 1e-9);
  CHECK(std::abs(c.points.back() - Complex(0.0, -2.0)) < 1e-9);
  CHECK(std::abs(c.endpoint_upper - Complex(0.0, 2.0)) < 1e-12);
  CHECK(std::abs(c.points[m / 2] - Complex(c.zA, 0.0)) < 1e-8);
  CHECK(std::abs(c.zA - solve_zA(1.0)) < 1e-9);

  double worst_res = 0.0;
  for (size_t k = 1; k + 1 < m; ++k) worst_res = std::max(worst_res, c.residuals[k]);
  CHECK(worst_res < 1e-10);

  // conjugate symmetry point by point
  double worst_conj = 0.0;
  for (size_t k = 0; k < m; ++k)
    worst_conj = std::max(worst_conj, std::abs(std::conj(c.points[k]) - c.points[m - 1 - k]));
  CHECK(worst_conj < 1e-8);

  // entirely in the closed left half plane
  for (const Complex& p : c.points) CHECK(p.real() <= 1e-12);

  // connectivity: no step larger than 3x the median step
  std::vector<double> steps;
  for (size_t k = 1; k < m; ++k) steps.push_back(std::abs(c.points[k] - c.points[k - 1]));
  std::vector<double> sorted = steps;
  std::sort(sorted.begin(), sorted.end());
  double median = sorted[sorted.size() / 2];
  for (double s : steps) CHECK(s < 3.0 * median);
  // near-uniform arclength between adjacent steps
  for (size_t k = 1; k < steps.size(); ++k) {
    double r = steps[k] / steps[k - 1];
    CHECK(r < 2.0);
    CHECK(r > 0.5);
  }
}

TEST_CASE("curve scales like the square root of A") {
  CurvePolyline c1 = trace_gamma(1.0, 64, 1e-10);
  CurvePolyline c4 = trace_gamma(4.0, 64, 1e-10);
  REQUIRE(c1.points.size() == c4.points.size());
  for (size_t k = 0; k < c1.points.size(); ++k)
    CHECK(std::abs(c4.points[k] - 2.0 * c1.points[k]) < 1e-6);
  CHECK(std::abs(c4.zA - 2.0 * c1.zA) < 1e-9);
}

TEST_CASE("distances to the sideways-Y set") {
  CurvePolyline c = trace_gamma(1.0, 128, 1e-10);
  const int n = 100;
  CHECK(distance_to_Yset(1.0, 1.0, n, Complex(c.zA, 0.0), c) < 1e-8);
  CHECK(distance_to_Yset(1.0, 1.0, n, Complex(-std::sqrt(double(n)), 0.0), c) < 1e-12);
  double dtip = distance_to_Yset(1.0, 1.0, n, Complex(1.0, 2.0), c);
  CHECK(dtip > 0.5);
  CHECK(dtip <= 1.0 + 1e-9);
  // interior stem point
  CHECK(distance_to_Yset(1.0, 1.0, n, Complex(-5.0, 0.3), c) == doctest::Approx(0.3));
  CHECK(distance_to_polyline(c.points[40], c.points) < 1e-14);
}

TEST_CASE("memoized trace returns one stable instance per A") {
  const CurvePolyline& a = cached_curve(1.0);
  const CurvePolyline& b = cached_curve(1.0);
  CHECK(&a == &b);
  CHECK(a.points.size() == 2 * 512 - 1);
  const CurvePolyline* seen[8] = {};
  parallel_for(8, [&](int i) { seen[i] = &cached_curve(2.0); });
  for (int i = 1; i < 8; ++i) CHECK(seen[i] == seen[0]);
  CHECK(seen[0] != &a);
}
