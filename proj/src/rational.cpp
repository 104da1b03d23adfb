#include "prasymp/rational.hpp"

#include <mpfr.h>

#include "prasymp/highprec.hpp"

namespace prasymp {

ScaledComplex to_scaled(const RationalComplex& v) {
  HPComplex h(256);
  // Route through mpfr so the double mantissa is rounded to nearest (the raw
  // mpq->double conversion truncates).
  mpfr_t t;
  mpfr_init2(t, 256);
  mpfr_set_q(t, v.re.get_mpq_t(), MPFR_RNDN);
  double dr, di;
  long er = 0, ei = 0;
  bool zr = mpfr_zero_p(t);
  dr = zr ? 0.0 : mpfr_get_d_2exp(&er, t, MPFR_RNDN);
  mpfr_set_q(t, v.im.get_mpq_t(), MPFR_RNDN);
  bool zi = mpfr_zero_p(t);
  di = zi ? 0.0 : mpfr_get_d_2exp(&ei, t, MPFR_RNDN);
  mpfr_clear(t);
  if (zr && zi) return ScaledComplex();
  long e = std::max(zr ? ei : er, zi ? er : ei);
  Complex m(zr ? 0.0 : std::ldexp(dr, static_cast<int>(std::max(er - e, -2200L))),
            zi ? 0.0 : std::ldexp(di, static_cast<int>(std::max(ei - e, -2200L))));
  return ScaledComplex::normalized(m, e);
}

}  // namespace prasymp
