#pragma once

#include <mpfr.h>

#include "prasymp/scaled.hpp"

namespace prasymp {

// Complex number at a configurable mantissa precision. Oracle use only: the
// recurrence needs just ring operations, so that is all this carries.
class HPComplex {
public:
  explicit HPComplex(int bits = 256);
  HPComplex(double re, double im, int bits = 256);
  HPComplex(const HPComplex& o);
  HPComplex(HPComplex&& o) noexcept;
  HPComplex& operator=(HPComplex o) noexcept;
  ~HPComplex();

  // Exact embedding: every ScaledComplex is representable at >= 53 bits.
  static HPComplex from(const ScaledComplex& v, int bits = 256);

  int bits() const { return bits_; }

  // Correctly rounded to a double mantissa; components aligned to the larger
  // exponent (the smaller may go subnormal/zero, as in a native complex).
  ScaledComplex to_scaled() const;

  friend HPComplex operator+(const HPComplex& u, const HPComplex& v);
  friend HPComplex operator-(const HPComplex& u, const HPComplex& v);
  friend HPComplex operator*(const HPComplex& u, const HPComplex& v);

private:
  void swap(HPComplex& o) noexcept;

  mpfr_t re_, im_;
  int bits_;
};

}  // namespace prasymp
