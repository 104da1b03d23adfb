#pragma once

#include <vector>

#include "prasymp/scaled.hpp"

namespace prasymp {

// The left-half-plane curve where the two exponential branches have equal
// magnitude, together with the real segment it meets: zeros accumulate on
// this sideways-Y set when a < 0 (A = -a > 0).
struct CurvePolyline {
  double A = 1.0;
  std::vector<Complex> points;     // +2i*sqrt(A) -> zA -> -2i*sqrt(A)
  std::vector<double> residuals;   // |gamma_residual| certificate per point
  double zA = 0.0;                 // junction with the negative real axis
  Complex endpoint_upper{}, endpoint_lower{};  // +-2i*sqrt(A)
};

// Re{ 2*psi - z*Log((z+psi)/(z-psi)) } with psi the Re-nonnegative square
// root of z^2+4A; its zero locus in the left half plane is the curve.
double gamma_residual(double A, Complex z);

// Negative real root of the residual, by bracketing bisection.
double solve_zA(double A, double tol = 1e-12);

// Predictor-corrector continuation from 2i*sqrt(A) to the real axis, mirrored
// by conjugation; 2*npts-1 points total, each certified to |residual| < tol.
CurvePolyline trace_gamma(double A, int npts = 512, double tol = 1e-10);

double distance_to_polyline(Complex z, const std::vector<Complex>& pts);

// Distance to [-sqrt(n)*d, zA] on the real axis union the traced curve.
double distance_to_Yset(double A, double d, int n, Complex z, const CurvePolyline& curve);

}  // namespace prasymp
