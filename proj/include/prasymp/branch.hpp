#pragma once

#include "prasymp/scaled.hpp"

namespace prasymp {

// Principal complex log with arg pinned to (-pi, pi]: a -0.0 imaginary part is
// treated as +0.0 so negative real inputs land on the upper side.
Complex principal_log(Complex w);

// sqrt(z^2 - 4a), branch cut on the straight segment joining the two roots
// +-2*sqrt(a) (real for a > 0, on the imaginary axis for a < 0), normalized so
// the value ~ z as |z| -> infinity in every direction. a = 0 collapses to z.
// Throws BranchCutError strictly between the roots; the roots themselves
// evaluate to 0.
Complex sqrt_quad(double a, Complex z);

// base^exponent as exp(exponent * Log base) with principal Log, returned in
// extended range because exponents here are O(n).
ScaledComplex log_pow(Complex base, Complex exponent);

// Principal arccos: real on [-1, 1] with range [0, pi].
Complex arccos_branch(Complex w);

}  // namespace prasymp
