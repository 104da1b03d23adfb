#pragma once

#include <gmpxx.h>

#include "prasymp/scaled.hpp"

namespace prasymp {

// Exact complex rational value. Doubles are dyadic, so embedding them here is
// exact; the recurrence over this type is therefore error-free.
struct RationalComplex {
  mpq_class re, im;

  RationalComplex() : re(0), im(0) {}
  RationalComplex(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static RationalComplex from(double r, double i = 0.0) {
    return RationalComplex(mpq_class(r), mpq_class(i));
  }

  friend RationalComplex operator+(const RationalComplex& u, const RationalComplex& v) {
    return {u.re + v.re, u.im + v.im};
  }
  friend RationalComplex operator-(const RationalComplex& u, const RationalComplex& v) {
    return {u.re - v.re, u.im - v.im};
  }
  friend RationalComplex operator*(const RationalComplex& u, const RationalComplex& v) {
    return {u.re * v.re - u.im * v.im, u.re * v.im + u.im * v.re};
  }
  friend bool operator==(const RationalComplex& u, const RationalComplex& v) {
    return u.re == v.re && u.im == v.im;
  }
};

// Correctly rounded to a double mantissa (routed through 256-bit floats).
ScaledComplex to_scaled(const RationalComplex& v);

}  // namespace prasymp
