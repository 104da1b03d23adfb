#include "prasymp/branch.hpp"

#include <cmath>

#include "prasymp/errors.hpp"

namespace prasymp {

Complex principal_log(Complex w) {
  if (w == 0.0) throw SingularError("log of zero");
  if (w.imag() == 0.0 && std::signbit(w.imag())) w = Complex(w.real(), 0.0);
  return std::log(w);
}

Complex sqrt_quad(double a, Complex z) {
  if (!std::isfinite(a) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw InvalidInputError("non-finite input to sqrt_quad");
  if (a == 0.0) return z;
  double x = z.real(), y = z.imag();
  double r = 2.0 * std::sqrt(std::abs(a));
  if (a > 0.0) {
    if (y == 0.0 && x > -r && x < r)
      throw BranchCutError("point on the cut [-2*sqrt(a), 2*sqrt(a)]");
    if (y == 0.0) {
      // Real axis outside the roots: factored form avoids cancellation near
      // the endpoints and overflow for large |x|.
      double ax = std::abs(x);
      double m = std::sqrt(ax - r) * std::sqrt(ax + r);
      return Complex(std::copysign(m, x), 0.0);
    }
    if (x == 0.0) return Complex(0.0, std::copysign(std::hypot(y, r), y));
  } else {
    if (x == 0.0 && y > -r && y < r)
      throw BranchCutError("point on the cut [-2i*sqrt(A), 2i*sqrt(A)]");
    if (x == 0.0) {
      double ay = std::abs(y);
      double m = std::sqrt(ay - r) * std::sqrt(ay + r);
      return Complex(0.0, std::copysign(m, y));
    }
  }
  if (std::abs(x) > 1e150 || std::abs(y) > 1e150) {
    Complex t = 2.0 / z;
    return z * std::sqrt(1.0 - a * (t * t));
  }
  // Off the axes at moderate magnitude the kernel is sign(Re z) times the
  // principal root of z^2-4a: the two jump across the imaginary axis together,
  // leaving only the canonical segment cut.
  Complex root = std::sqrt(z * z - 4.0 * a);
  return x > 0.0 ? root : -root;
}

ScaledComplex log_pow(Complex base, Complex exponent) {
  if (!std::isfinite(base.real()) || !std::isfinite(base.imag()) ||
      !std::isfinite(exponent.real()) || !std::isfinite(exponent.imag()))
    throw InvalidInputError("non-finite input to log_pow");
  if (base == 0.0) {
    if (exponent.real() > 0.0) return ScaledComplex();
    throw SingularError("0 raised to exponent with nonpositive real part");
  }
  if (exponent == 0.0) return ScaledComplex::from(1.0);
  return ScaledComplex::from_log(exponent * principal_log(base));
}

Complex arccos_branch(Complex w) { return std::acos(w); }

}  // namespace prasymp
