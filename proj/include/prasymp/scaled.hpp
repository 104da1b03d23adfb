#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "prasymp/errors.hpp"

namespace prasymp {

using Complex = std::complex<double>;

inline constexpr int kMantissaBits = 53;
inline constexpr double kLn2 = 0.69314718055994530942;

// Complex number stored as mantissa * 2^exponent with the exponent kept in a
// separate 64-bit integer, so magnitudes of order exp(+-n log n) stay
// representable and relative errors stay measurable. Nonzero values are kept
// normalized with |mantissa| in [1, 2); zero is canonically (0, 0).
class ScaledComplex {
public:
  ScaledComplex() = default;  // canonical zero

  static ScaledComplex normalized(Complex mantissa, std::int64_t exponent);
  static ScaledComplex from(Complex v) { return normalized(v, 0); }
  static ScaledComplex from(double v) { return normalized(Complex(v, 0.0), 0); }
  // exp(log_value), decomposed so that Re(log_value) of order n*log(n) does
  // not overflow. Uses a split ln2 so the reduction error stays ~1 ulp.
  static ScaledComplex from_log(Complex log_value);

  Complex mantissa() const { return m_; }
  std::int64_t exp2() const { return e_; }
  bool is_zero() const { return m_ == 0.0; }

  // Value as a plain complex; saturates to inf/0 outside the native range.
  Complex to_complex() const {
    int sh = static_cast<int>(std::clamp<std::int64_t>(e_, -4400, 4400));
    return Complex(std::ldexp(m_.real(), sh), std::ldexp(m_.imag(), sh));
  }

  // ln|value|; -inf for zero.
  double log_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log(std::abs(m_)) + static_cast<double>(e_) * kLn2;
  }

  double arg() const { return std::arg(m_); }

  ScaledComplex conj() const {
    ScaledComplex r;
    r.m_ = std::conj(m_);
    r.e_ = e_;
    return r;
  }

  friend ScaledComplex operator-(const ScaledComplex& u) {
    ScaledComplex r;
    r.m_ = -u.m_;
    r.e_ = u.e_;
    return r;
  }

  friend bool operator==(const ScaledComplex& u, const ScaledComplex& v) {
    return u.m_ == v.m_ && u.e_ == v.e_;
  }

private:
  ScaledComplex(Complex m, std::int64_t e) : m_(m), e_(e) {}

  Complex m_{0.0, 0.0};
  std::int64_t e_ = 0;
};

namespace detail {

inline std::int64_t checked_add_exp(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("scaled exponent overflow: " + std::to_string(a) + " + " +
                        std::to_string(b));
  return r;
}

}  // namespace detail

inline ScaledComplex ScaledComplex::normalized(Complex mantissa, std::int64_t exponent) {
  if (!std::isfinite(mantissa.real()) || !std::isfinite(mantissa.imag()))
    throw InvalidInputError("non-finite mantissa");
  if (mantissa == 0.0) return ScaledComplex();
  double peak = std::max(std::abs(mantissa.real()), std::abs(mantissa.imag()));
  int k = std::ilogb(peak);
  Complex m(std::ldexp(mantissa.real(), -k), std::ldexp(mantissa.imag(), -k));
  // Larger component now in [1, 2), so |m| in [1, 2*sqrt(2)); at most one
  // exact halving brings |m| into [1, 2).
  if (std::norm(m) >= 4.0) {
    m = Complex(m.real() * 0.5, m.imag() * 0.5);
    ++k;
  }
  return ScaledComplex(m, detail::checked_add_exp(exponent, k));
}

inline ScaledComplex ScaledComplex::from_log(Complex log_value) {
  if (!std::isfinite(log_value.real()) || !std::isfinite(log_value.imag()))
    throw InvalidInputError("non-finite log value");
  // 12-bit head of ln2: ed * kLn2Hi is exact for |ed| < 2^41, and the first
  // subtraction below is Sterbenz-exact, so the reduction loses only the
  // rounding of ed * kLn2Lo.
  constexpr double kLn2Hi = 0.693359375;
  constexpr double kLn2Lo = -2.12194440054690582767879077616e-04;
  double re = log_value.real();
  double ed = std::floor(re / kLn2);
  if (std::abs(ed) > 2.0e12) throw OverflowError("log magnitude exceeds supported range");
  auto e = static_cast<std::int64_t>(ed);
  double r = (re - ed * kLn2Hi) - ed * kLn2Lo;
  Complex m = std::exp(r) * Complex(std::cos(log_value.imag()), std::sin(log_value.imag()));
  return normalized(m, e);
}

inline ScaledComplex operator*(const ScaledComplex& u, const ScaledComplex& v) {
  if (u.is_zero() || v.is_zero()) return ScaledComplex();
  return ScaledComplex::normalized(u.mantissa() * v.mantissa(),
                                   detail::checked_add_exp(u.exp2(), v.exp2()));
}

inline ScaledComplex operator/(const ScaledComplex& u, const ScaledComplex& v) {
  if (v.is_zero()) throw DivisionByZeroError("scaled division by zero");
  if (u.is_zero()) return ScaledComplex();
  return ScaledComplex::normalized(u.mantissa() / v.mantissa(),
                                   detail::checked_add_exp(u.exp2(), -v.exp2()));
}

inline ScaledComplex operator+(const ScaledComplex& u, const ScaledComplex& v) {
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  const ScaledComplex* hi = &u;
  const ScaledComplex* lo = &v;
  if (v.exp2() > u.exp2()) std::swap(hi, lo);
  std::int64_t gap = hi->exp2() - lo->exp2();
  // Past the mantissa precision the smaller operand is contractually absorbed:
  // the result is the larger operand exactly.
  if (gap > kMantissaBits) return *hi;
  int sh = -static_cast<int>(gap);
  Complex shifted(std::ldexp(lo->mantissa().real(), sh), std::ldexp(lo->mantissa().imag(), sh));
  Complex m = hi->mantissa() + shifted;
  if (m == 0.0) return ScaledComplex();
  return ScaledComplex::normalized(m, hi->exp2());
}

inline ScaledComplex operator-(const ScaledComplex& u, const ScaledComplex& v) { return u + (-v); }

// |u/v - 1| via exponent-aligned division; +inf when the exponents are too
// far apart for the mantissas to be comparable at all.
inline double rel_error(const ScaledComplex& u, const ScaledComplex& v) {
  if (v.is_zero()) throw DivisionByZeroError("rel_error against zero");
  if (u.is_zero()) return 1.0;
  std::int64_t gap = u.exp2() - v.exp2();
  if (gap > kMantissaBits || gap < -kMantissaBits)
    return std::numeric_limits<double>::infinity();
  Complex q = u.mantissa() / v.mantissa();
  int sh = static_cast<int>(gap);
  q = Complex(std::ldexp(q.real(), sh), std::ldexp(q.imag(), sh));
  return std::abs(q - 1.0);
}

// Text form "m_re m_im e"; shortest round-trip decimals (see io.cpp).
std::string to_text(const ScaledComplex& v);
ScaledComplex scaled_from_text(const std::string& text);

}  // namespace prasymp
