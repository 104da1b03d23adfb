#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "prasymp/asymptotics.hpp"
#include "prasymp/zeros.hpp"
#include "support.hpp"

using namespace prasymp;
using testsup::rng;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Greedy nearest matching; order-insensitive comparison of two zero sets.
double match_sets(std::vector<Complex> u, std::vector<Complex> v) {
  REQUIRE(u.size() == v.size());
  double worst = 0.0;
  for (Complex zu : u) {
    size_t best = 0;
    double bd = 1e300;
    for (size_t j = 0; j < v.size(); ++j) {
      double d = std::abs(zu - v[j]);
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    worst = std::max(worst, bd);
    v.erase(v.begin() + long(best));
  }
  return worst;
}
}  // namespace

TEST_CASE("pure three-term case reproduces the cosine zeros") {
  RecurrenceParams p(0.0, 0.0, 0.25);
  const int n = 20;
  ZeroSet zs = find_zeros(p, n);
  REQUIRE(int(zs.zeros.size()) == n);
  for (int i = 0; i < n; ++i) {
    double want = std::cos((n - i) * kPi / (n + 1));
    CHECK(std::abs(zs.zeros[i] - Complex(want, 0.0)) < 1e-8);
  }
  CHECK(std::is_sorted(zs.zeros.begin(), zs.zeros.end(),
                       [](Complex a, Complex b) { return a.real() < b.real(); }));
}

TEST_CASE("d = 0, a > 0: all zeros real and symmetric") {
  ZeroSet zs = find_zeros(RecurrenceParams(0.0, 0.5, 0.0), 50);
  REQUIRE(zs.zeros.size() == 50);
  for (Complex z : zs.zeros) CHECK(std::abs(z.imag()) < 1e-8);
  for (int i = 0; i < 50; ++i)
    CHECK(std::abs(zs.zeros[i] + zs.zeros[49 - i]) < 1e-8);
}

TEST_CASE("d = 0, a < 0: all zeros on the imaginary axis") {
  ZeroSet zs = find_zeros(RecurrenceParams(0.0, -1.0, 0.0), 50);
  REQUIRE(zs.zeros.size() == 50);
  for (Complex z : zs.zeros) CHECK(std::abs(z.real()) < 1e-8);
  // the rotated scaled coordinate puts them back on the real axis
  for (Complex s : zs.scaled) CHECK(std::abs(s.imag()) < 1e-8);
}

TEST_CASE("residuals certify zeros and flag a spoiled one") {
  RecurrenceParams p(0.0, 0.0, 0.25);
  ZeroSet zs = find_zeros(p, 10);
  for (double r : zs.residuals) CHECK(r < 1e-10);

  std::vector<Complex> bad = zs.zeros;
  bad[3] += 0.01;
  std::vector<double> res = zero_residuals(p, bad);
  CHECK(res[3] > 1e-3);

  ZeroSet one = find_zeros(p, 1);
  CHECK(std::abs(one.zeros[0]) < 1e-10);
  CHECK(one.residuals[0] < 1e-12);
}

TEST_CASE("degree two matches the quadratic formula") {
  auto g = rng(77);
  int done = 0;
  while (done < 100) {
    double d = testsup::uniform(g, -2.0, 2.0);
    double a = testsup::uniform(g, -2.0, 2.0);
    double b = testsup::uniform(g, -2.0, 2.0);
    double disc = d * d + 4.0 * (a + b);
    if (std::abs(disc) < 0.1) continue;  // keep the roots separated
    ++done;
    Complex sq = std::sqrt(Complex(disc, 0.0));
    std::vector<Complex> want = {(Complex(d, 0.0) - sq) / 2.0,
                                 (Complex(d, 0.0) + sq) / 2.0};
    ZeroSet zs = find_zeros(RecurrenceParams(d, a, b), 2);
    CHECK(match_sets(zs.zeros, want) < 1e-10);
  }
}

TEST_CASE("reflection negates the zero set") {
  ZeroSet plus = find_zeros(RecurrenceParams(1.0, 1.0, 0.2), 12);
  ZeroSet minus = find_zeros(RecurrenceParams(-1.0, 1.0, 0.2), 12);
  for (int i = 0; i < 12; ++i)
    CHECK(std::abs(minus.zeros[i] + plus.zeros[11 - i]) < 1e-8);
}

TEST_CASE("real coefficients give conjugate-closed zero sets") {
  ZeroSet zs = find_zeros(RecurrenceParams(1.0, -1.0, 0.0), 60);
  std::vector<Complex> conj(zs.zeros.size());
  std::transform(zs.zeros.begin(), zs.zeros.end(), conj.begin(),
                 [](Complex z) { return std::conj(z); });
  CHECK(match_sets(zs.zeros, conj) < 1e-8);
}

TEST_CASE("scaled coordinates recentre at nd") {
  ZeroSet zs = find_zeros(RecurrenceParams(1.0, 1.0, 0.0), 30);
  const double rn = std::sqrt(30.0);
  for (int i = 0; i < 30; ++i) {
    Complex want = (zs.zeros[i] - 30.0) / rn;
    CHECK(std::abs(zs.scaled[i] - want) < 1e-14);
  }
}

TEST_CASE("eigenvalue oracle agrees across cases") {
  struct Probe {
    RecurrenceParams p;
    int n;
  } probes[] = {
      {RecurrenceParams(1.0, 1.0, 0.0), 40},
      {RecurrenceParams(1.0, -1.0, 0.3), 40},
      {RecurrenceParams(0.0, -1.0, 0.0), 30},
  };
  for (const Probe& pr : probes) {
    ZeroSet zs = find_zeros(pr.p, pr.n);
    std::vector<Complex> eig = tridiagonal_zeros(pr.p, pr.n);
    CHECK(match_sets(zs.zeros, eig) < 1e-7);
  }
  CHECK_THROWS_AS(tridiagonal_zeros(RecurrenceParams(1.0, 1.0, 0.0), 61),
                  InvalidInputError);
}

TEST_CASE("stalled iteration reports the stuck indices") {
  try {
    find_zeros(RecurrenceParams(1.0, 1.0, 0.0), 30, 1e-10, 1);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK_FALSE(e.unconverged.empty());
    for (int i : e.unconverged) {
      CHECK(i >= 0);
      CHECK(i < 30);
    }
  }
}

TEST_CASE("scaled zeros trace the sideways-Y set") {
  RecurrenceParams p(1.0, -1.0, 0.0);
  CHECK(zeros_vs_Yset(p, 200, cached_curve(1.0)) < 0.25);
  CHECK_THROWS_AS(zeros_vs_Yset(RecurrenceParams(1.0, 1.0, 0.0), 50, cached_curve(1.0)),
                  InvalidInputError);
}

TEST_CASE("scaled zeros fill the support interval when a > 0") {
  RecurrenceParams p(1.0, 1.0, 0.0);
  const int n = 200;
  ZeroSet zs = find_zeros(p, n);
  const double lo = -std::sqrt(double(n)), hi = 2.0;
  for (Complex s : zs.scaled) {
    double re = std::clamp(s.real(), lo, hi);
    CHECK(std::hypot(s.real() - re, s.imag()) < 0.15);
  }
}
