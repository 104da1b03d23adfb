#include "prasymp/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "prasymp/branch.hpp"
#include "prasymp/errors.hpp"
#include "prasymp/io.hpp"

namespace prasymp {

namespace {

void check_A(double A) {
  if (!(A > 0.0) || !std::isfinite(A)) throw InvalidInputError("A must be positive and finite");
}

}  // namespace

double gamma_residual(double A, Complex z) {
  check_A(A);
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw InvalidInputError("non-finite point");
  double r = 2.0 * std::sqrt(A);
  if (z == Complex(0.0, r) || z == Complex(0.0, -r))
    throw SingularError("residual undefined at the curve endpoints +-2i*sqrt(A)");
  Complex psi = sqrt_quad(-A, z);
  if (psi.real() < 0.0) psi = -psi;
  Complex L = principal_log((z + psi) / (z - psi));
  return (2.0 * psi - z * L).real();
}

double solve_zA(double A, double tol) {
  check_A(A);
  if (!(tol > 0.0)) throw InvalidInputError("tolerance must be positive");
  double s = std::sqrt(A);
  double hi = -s, lo = -4.0 * s;
  double fhi = gamma_residual(A, Complex(hi, 0.0));
  double flo = gamma_residual(A, Complex(lo, 0.0));
  int doublings = 0;
  while (flo * fhi > 0.0) {
    if (++doublings > 60) throw SolverError("no sign change bracketing zA");
    lo *= 2.0;
    flo = gamma_residual(A, Complex(lo, 0.0));
  }
  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < 300; ++i) {
    mid = 0.5 * (lo + hi);
    double fm = gamma_residual(A, Complex(mid, 0.0));
    if (std::abs(fm) < tol) return mid;
    // Residual is increasing in z on the negative axis.
    if (fm < 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 4.0 * std::abs(mid) * std::numeric_limits<double>::epsilon()) break;
  }
  double fm = gamma_residual(A, Complex(mid, 0.0));
  if (std::abs(fm) < tol) return mid;
  throw SolverError("zA bisection stalled above tolerance");
}

namespace {

// One corrector solve: move from pred along the unit normal to the residual
// zero, Newton with central differences, bisection fallback when bracketed.
Complex correct_to_curve(Complex pred, Complex normal, double step, double ctol) {
  auto g = [&](double s) { return gamma_residual(1.0, pred + s * normal); };
  double s = 0.0, gs = g(s);
  const double fd = 1e-7;
  for (int it = 0; it < 60; ++it) {
    if (std::abs(gs) < ctol) return pred + s * normal;
    double deriv = (g(s + fd) - g(s - fd)) / (2.0 * fd);
    if (deriv == 0.0) break;
    double sn = s - gs / deriv;
    if (!(std::abs(sn) <= step)) break;
    s = sn;
    gs = g(s);
  }
  // Fallback: bracketed bisection across the curve.
  double a = -step, b = step;
  double ga = g(a), gb = g(b);
  if (ga * gb > 0.0)
    throw SolverError("trace corrector diverged near " + fmt_double(pred.real()) + "+" +
                      fmt_double(pred.imag()) + "i");
  for (int it = 0; it < 200; ++it) {
    double m = 0.5 * (a + b);
    double gm = g(m);
    if (std::abs(gm) < ctol) return pred + m * normal;
    if (ga * gm <= 0.0) {
      b = m;
      gb = gm;
    } else {
      a = m;
      ga = gm;
    }
  }
  throw SolverError("trace corrector failed to certify near " + fmt_double(pred.real()) + "+" +
                    fmt_double(pred.imag()) + "i");
}

// Departure direction from the endpoint 2i: smallest |residual| over a probe
// semicircle into the left half plane, then golden-section refinement.
double departure_angle(double h0) {
  const Complex start(0.0, 2.0);
  auto res = [&](double th) {
    return std::abs(gamma_residual(1.0, start + h0 * Complex(std::cos(th), std::sin(th))));
  };
  const double deg = std::acos(-1.0) / 180.0;
  double best = 0.0, bestv = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 352; ++k) {
    double th = (92.0 + 0.5 * k) * deg;
    double v = res(th);
    if (v < bestv) {
      bestv = v;
      best = th;
    }
  }
  double a = best - 0.5 * deg, b = best + 0.5 * deg;
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = res(x1), f2 = res(x2);
  for (int it = 0; it < 40; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = res(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = res(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

CurvePolyline trace_gamma(double A, int npts, double tol) {
  check_A(A);
  if (npts < 16) throw InvalidInputError("npts must be at least 16");
  if (!(tol > 0.0)) throw InvalidInputError("tolerance must be positive");
  double rootA = std::sqrt(A);
  // The residual scales as sqrt(A) under z -> sqrt(A)*u, so the whole trace
  // runs in the A = 1 plane and is scaled at the end.
  double ctol = std::max(0.5 * tol / rootA, 1e-14);
  double zA = solve_zA(A, std::min(tol, 1e-12));
  Complex u_zA(zA / rootA, 0.0);

  double theta = departure_angle(1e-3);
  Complex dir(std::cos(theta), std::sin(theta));
  Complex u0 = Complex(0.0, 2.0) + 1e-10 * dir;

  // Pass 1: fine fixed-step trace to measure arclength.
  double hc = 0.005;
  Complex p = u0;
  Complex tang = dir;
  double length = 0.0;
  for (int guard = 0; guard < 20000; ++guard) {
    Complex pred = p + hc * tang;
    if (pred.imag() <= 0.0) break;
    Complex q = correct_to_curve(pred, Complex(-tang.imag(), tang.real()), hc, ctol);
    length += std::abs(q - p);
    tang = (q - p) / std::abs(q - p);
    p = q;
    if (p.imag() <= hc) break;
  }
  length += std::abs(u_zA - p);
  if (std::abs(p - u_zA) > 0.2)
    throw SolverError("trace did not terminate near the real-axis junction");

  // Pass 2: arclength-uniform resample.
  int M = npts;
  double h = length / (M - 1);
  std::vector<Complex> upper;
  upper.reserve(M);
  upper.push_back(u0);
  p = u0;
  tang = dir;
  for (int k = 1; k <= M - 2; ++k) {
    Complex pred = p + h * tang;
    Complex q = correct_to_curve(pred, Complex(-tang.imag(), tang.real()), h, ctol);
    if (q.imag() <= 0.0)
      throw SolverError("trace crossed the axis early; arclength estimate failed");
    upper.push_back(q);
    tang = (q - p) / std::abs(q - p);
    p = q;
  }
  upper.push_back(u_zA);

  CurvePolyline out;
  out.A = A;
  out.zA = zA;
  out.endpoint_upper = Complex(0.0, 2.0 * rootA);
  out.endpoint_lower = Complex(0.0, -2.0 * rootA);
  out.points.reserve(2 * M - 1);
  for (const Complex& u : upper) out.points.push_back(rootA * u);
  out.points[M - 1] = Complex(zA, 0.0);
  for (int k = M - 2; k >= 0; --k) out.points.push_back(std::conj(out.points[k]));
  out.residuals.reserve(out.points.size());
  for (const Complex& z : out.points) out.residuals.push_back(gamma_residual(A, z));
  return out;
}

double distance_to_polyline(Complex z, const std::vector<Complex>& pts) {
  if (pts.empty()) throw InvalidInputError("empty polyline");
  auto seg = [&](Complex a, Complex b) {
    Complex ab = b - a;
    double L2 = std::norm(ab);
    if (L2 == 0.0) return std::abs(z - a);
    double t = std::clamp(((z - a) * std::conj(ab)).real() / L2, 0.0, 1.0);
    return std::abs(z - (a + t * ab));
  };
  double best = std::abs(z - pts.front());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) best = std::min(best, seg(pts[i], pts[i + 1]));
  return best;
}

double distance_to_Yset(double A, double d, int n, Complex z, const CurvePolyline& curve) {
  check_A(A);
  if (curve.A != A) throw InvalidInputError("curve was traced for a different A");
  if (!(d > 0.0) || n < 1) throw InvalidInputError("distance_to_Yset needs d > 0, n >= 1");
  double lo = -std::sqrt(static_cast<double>(n)) * d;
  double hi = curve.zA;
  double t = std::clamp(z.real(), lo, hi);
  double dseg = std::abs(z - Complex(t, 0.0));
  return std::min(dseg, distance_to_polyline(z, curve.points));
}

}  // namespace prasymp
