#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prasymp/scaled.hpp"

namespace prasymp {

// pi_{n+1}(x) = (x - dn) pi_n(x) - (an + b) pi_{n-1}(x), pi_0 = 1, pi_1 = x.
// Cases split on the signs of d and a; d < 0 is handled by the reflection
// x -> -x, pi_n -> (-1)^n pi_n, which maps (d,a,b) to (-d,a,b).
enum class CaseTag { IA, IB, IC, IIA, IIB, IIC };

std::string to_string(CaseTag tag);

struct RecurrenceParams {
  double d = 0.0, a = 0.0, b = 0.0;

  RecurrenceParams(double d_, double a_, double b_);

  CaseTag case_tag() const;
  double A() const { return -a; }
  double B() const { return -b; }
  bool needs_reflection() const { return d < 0.0; }
  RecurrenceParams reflected() const { return RecurrenceParams(-d, a, b); }
};

struct PolyValue {
  int n = 0;
  Complex x{};
  ScaledComplex value;
  std::optional<ScaledComplex> derivative;
};

PolyValue eval_pi(const RecurrenceParams& p, Complex x, int n);
PolyValue eval_pi_deriv(const RecurrenceParams& p, Complex x, int n);

// Oracle modes: same forward recurrence at a configurable mantissa precision,
// or in exact rational arithmetic (doubles embed exactly).
ScaledComplex eval_pi_highprec(const RecurrenceParams& p, Complex x, int n, int bits = 256);
PolyValue eval_pi_deriv_highprec(const RecurrenceParams& p, Complex x, int n, int bits = 256);
ScaledComplex eval_pi_rational(const RecurrenceParams& p, Complex x, int n);

// w_1..w_n with w_1 = x and w_{k+1} = x - dk - (ak+b)/w_k, so that
// pi_n = prod w_k. Throws NearZeroRatioError when some |w_k| < 1e-290.
std::vector<Complex> ratio_sequence(const RecurrenceParams& p, Complex x, int n);

// Two-term ratio approximations from the successive-approximation ansatz;
// the d > 0 and d = 0 shapes differ.
Complex wk_asymptotic(const RecurrenceParams& p, Complex x, int k, int n);

// Exact multiply by i^k (k may be negative): mantissa component swap.
ScaledComplex mul_i_pow(const ScaledComplex& v, long k);

}  // namespace prasymp
