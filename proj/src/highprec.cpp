#include "prasymp/highprec.hpp"

#include <algorithm>
#include <utility>

namespace prasymp {

HPComplex::HPComplex(int bits) : bits_(bits) {
  if (bits < 53) throw InvalidInputError("precision below native double");
  mpfr_init2(re_, bits);
  mpfr_init2(im_, bits);
  mpfr_set_zero(re_, 1);
  mpfr_set_zero(im_, 1);
}

HPComplex::HPComplex(double re, double im, int bits) : HPComplex(bits) {
  mpfr_set_d(re_, re, MPFR_RNDN);
  mpfr_set_d(im_, im, MPFR_RNDN);
}

HPComplex::HPComplex(const HPComplex& o) : bits_(o.bits_) {
  mpfr_init2(re_, bits_);
  mpfr_init2(im_, bits_);
  mpfr_set(re_, o.re_, MPFR_RNDN);
  mpfr_set(im_, o.im_, MPFR_RNDN);
}

HPComplex::HPComplex(HPComplex&& o) noexcept : bits_(o.bits_) {
  mpfr_init2(re_, 53);
  mpfr_init2(im_, 53);
  mpfr_swap(re_, o.re_);
  mpfr_swap(im_, o.im_);
}

HPComplex& HPComplex::operator=(HPComplex o) noexcept {
  swap(o);
  return *this;
}

HPComplex::~HPComplex() {
  mpfr_clear(re_);
  mpfr_clear(im_);
}

void HPComplex::swap(HPComplex& o) noexcept {
  mpfr_swap(re_, o.re_);
  mpfr_swap(im_, o.im_);
  std::swap(bits_, o.bits_);
}

HPComplex HPComplex::from(const ScaledComplex& v, int bits) {
  HPComplex r(v.mantissa().real(), v.mantissa().imag(), bits);
  mpfr_mul_2si(r.re_, r.re_, v.exp2(), MPFR_RNDN);
  mpfr_mul_2si(r.im_, r.im_, v.exp2(), MPFR_RNDN);
  return r;
}

ScaledComplex HPComplex::to_scaled() const {
  bool zr = mpfr_zero_p(re_), zi = mpfr_zero_p(im_);
  if (zr && zi) return ScaledComplex();
  long er = 0, ei = 0;
  double dr = zr ? 0.0 : mpfr_get_d_2exp(&er, re_, MPFR_RNDN);
  double di = zi ? 0.0 : mpfr_get_d_2exp(&ei, im_, MPFR_RNDN);
  long e = std::max(zr ? ei : er, zi ? er : ei);
  Complex m(zr ? 0.0 : std::ldexp(dr, static_cast<int>(std::max(er - e, -2200L))),
            zi ? 0.0 : std::ldexp(di, static_cast<int>(std::max(ei - e, -2200L))));
  return ScaledComplex::normalized(m, e);
}

HPComplex operator+(const HPComplex& u, const HPComplex& v) {
  HPComplex r(std::max(u.bits_, v.bits_));
  mpfr_add(r.re_, u.re_, v.re_, MPFR_RNDN);
  mpfr_add(r.im_, u.im_, v.im_, MPFR_RNDN);
  return r;
}

HPComplex operator-(const HPComplex& u, const HPComplex& v) {
  HPComplex r(std::max(u.bits_, v.bits_));
  mpfr_sub(r.re_, u.re_, v.re_, MPFR_RNDN);
  mpfr_sub(r.im_, u.im_, v.im_, MPFR_RNDN);
  return r;
}

HPComplex operator*(const HPComplex& u, const HPComplex& v) {
  int bits = std::max(u.bits_, v.bits_);
  HPComplex r(bits);
  mpfr_t t1, t2;
  mpfr_init2(t1, bits);
  mpfr_init2(t2, bits);
  mpfr_mul(t1, u.re_, v.re_, MPFR_RNDN);
  mpfr_mul(t2, u.im_, v.im_, MPFR_RNDN);
  mpfr_sub(r.re_, t1, t2, MPFR_RNDN);
  mpfr_mul(t1, u.re_, v.im_, MPFR_RNDN);
  mpfr_mul(t2, u.im_, v.re_, MPFR_RNDN);
  mpfr_add(r.im_, t1, t2, MPFR_RNDN);
  mpfr_clear(t1);
  mpfr_clear(t2);
  return r;
}

}  // namespace prasymp
