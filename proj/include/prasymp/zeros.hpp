#pragma once

#include <vector>

#include "prasymp/curve.hpp"
#include "prasymp/recurrence.hpp"

namespace prasymp {

struct ZeroSet {
  RecurrenceParams params{0.0, 0.0, 0.0};
  int n = 0;
  std::vector<Complex> zeros;      // sorted by (re, im)
  std::vector<double> residuals;   // |pi/pi'| over distance to nearest sibling
  std::vector<Complex> scaled;     // (x - nd)/sqrt(n) if d != 0, x/sqrt(n) if
                                   // d == 0, rotated off the imaginary axis for IIB
};

// Simultaneous (Aberth-Ehrlich) iteration on the scaled recurrence; all n
// zeros at once, no deflation. Throws ConvergenceError listing stuck indices.
ZeroSet find_zeros(const RecurrenceParams& p, int n, double tol = 1e-10,
                   int maxiter = 400);

std::vector<double> zero_residuals(const RecurrenceParams& p,
                                   const std::vector<Complex>& zeros);

// Max distance from the scaled zeros to the sideways-Y set, skipping zeros
// within 0.3 of the three branch tips where the asymptotics are not uniform.
double zeros_vs_Yset(const RecurrenceParams& p, int n, const CurvePolyline& curve);

// Eigenvalues of the companion tridiagonal matrix (diag dk, unit subdiagonal,
// superdiagonal ak+b). Dense solve, so capped at n <= 60; test oracle only.
std::vector<Complex> tridiagonal_zeros(const RecurrenceParams& p, int n);

}  // namespace prasymp
