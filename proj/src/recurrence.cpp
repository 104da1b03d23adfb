#include "prasymp/recurrence.hpp"

#include <gmpxx.h>

#include "prasymp/branch.hpp"
#include "prasymp/errors.hpp"
#include "prasymp/highprec.hpp"
#include "prasymp/rational.hpp"

namespace prasymp {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::IA: return "IA";
    case CaseTag::IB: return "IB";
    case CaseTag::IC: return "IC";
    case CaseTag::IIA: return "IIA";
    case CaseTag::IIB: return "IIB";
    case CaseTag::IIC: return "IIC";
  }
  return "?";
}

RecurrenceParams::RecurrenceParams(double d_, double a_, double b_) : d(d_), a(a_), b(b_) {
  if (!std::isfinite(d) || !std::isfinite(a) || !std::isfinite(b))
    throw InvalidInputError("recurrence coefficients must be finite");
}

CaseTag RecurrenceParams::case_tag() const {
  if (d != 0.0) {
    if (a > 0.0) return CaseTag::IA;
    if (a < 0.0) return CaseTag::IB;
    return CaseTag::IC;
  }
  if (a > 0.0) return CaseTag::IIA;
  if (a < 0.0) return CaseTag::IIB;
  return CaseTag::IIC;
}

namespace {

void check_n(int n) {
  if (n < 0) throw InvalidInputError("degree must be nonnegative");
}

void check_x(Complex x) {
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
    throw InvalidInputError("argument must be finite");
}

}  // namespace

PolyValue eval_pi(const RecurrenceParams& p, Complex x, int n) {
  check_n(n);
  check_x(x);
  PolyValue out{n, x, ScaledComplex::from(1.0), std::nullopt};
  if (n == 0) return out;
  ScaledComplex prev = out.value;
  ScaledComplex cur = ScaledComplex::from(x);
  for (int k = 1; k < n; ++k) {
    ScaledComplex next = ScaledComplex::from(Complex(x.real() - p.d * k, x.imag())) * cur -
                         ScaledComplex::from(p.a * k + p.b) * prev;
    prev = cur;
    cur = next;
  }
  out.value = cur;
  return out;
}

PolyValue eval_pi_deriv(const RecurrenceParams& p, Complex x, int n) {
  check_n(n);
  check_x(x);
  PolyValue out{n, x, ScaledComplex::from(1.0), ScaledComplex()};
  if (n == 0) return out;
  ScaledComplex prev = ScaledComplex::from(1.0), cur = ScaledComplex::from(x);
  ScaledComplex dprev, dcur = ScaledComplex::from(1.0);
  for (int k = 1; k < n; ++k) {
    ScaledComplex xa = ScaledComplex::from(Complex(x.real() - p.d * k, x.imag()));
    ScaledComplex bk = ScaledComplex::from(p.a * k + p.b);
    ScaledComplex next = xa * cur - bk * prev;
    ScaledComplex dnext = cur + xa * dcur - bk * dprev;
    prev = cur;
    cur = next;
    dprev = dcur;
    dcur = dnext;
  }
  out.value = cur;
  out.derivative = dcur;
  return out;
}

ScaledComplex eval_pi_highprec(const RecurrenceParams& p, Complex x, int n, int bits) {
  check_n(n);
  check_x(x);
  if (n == 0) return ScaledComplex::from(1.0);
  HPComplex prev(1.0, 0.0, bits);
  HPComplex cur(x.real(), x.imag(), bits);
  for (int k = 1; k < n; ++k) {
    HPComplex xa(x.real() - p.d * k, x.imag(), bits);
    HPComplex bk(p.a * k + p.b, 0.0, bits);
    HPComplex next = xa * cur - bk * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur.to_scaled();
}

PolyValue eval_pi_deriv_highprec(const RecurrenceParams& p, Complex x, int n, int bits) {
  check_n(n);
  check_x(x);
  PolyValue out{n, x, ScaledComplex::from(1.0), ScaledComplex()};
  if (n == 0) return out;
  HPComplex prev(1.0, 0.0, bits), cur(x.real(), x.imag(), bits);
  HPComplex dprev(0.0, 0.0, bits), dcur(1.0, 0.0, bits);
  for (int k = 1; k < n; ++k) {
    HPComplex xa(x.real() - p.d * k, x.imag(), bits);
    HPComplex bk(p.a * k + p.b, 0.0, bits);
    HPComplex next = xa * cur - bk * prev;
    HPComplex dnext = cur + xa * dcur - bk * dprev;
    prev = std::move(cur);
    cur = std::move(next);
    dprev = std::move(dcur);
    dcur = std::move(dnext);
  }
  out.value = cur.to_scaled();
  out.derivative = dcur.to_scaled();
  return out;
}

ScaledComplex eval_pi_rational(const RecurrenceParams& p, Complex x, int n) {
  check_n(n);
  check_x(x);
  if (n == 0) return ScaledComplex::from(1.0);
  mpq_class d(p.d), a(p.a), b(p.b);
  RationalComplex prev = RationalComplex::from(1.0);
  RationalComplex cur = RationalComplex::from(x.real(), x.imag());
  for (int k = 1; k < n; ++k) {
    RationalComplex xa(mpq_class(x.real()) - d * k, mpq_class(x.imag()));
    RationalComplex bk(a * k + b, mpq_class(0));
    RationalComplex next = xa * cur - bk * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return to_scaled(cur);
}

std::vector<Complex> ratio_sequence(const RecurrenceParams& p, Complex x, int n) {
  if (n < 1) throw InvalidInputError("ratio sequence needs n >= 1");
  check_x(x);
  std::vector<Complex> w;
  w.reserve(n);
  w.push_back(x);
  for (int k = 1; k < n; ++k) {
    if (std::abs(w.back()) < 1e-290)
      throw NearZeroRatioError("ratio w_k vanishes along the trajectory", k);
    Complex next = x - p.d * static_cast<double>(k) - (p.a * k + p.b) / w.back();
    w.push_back(next);
  }
  return w;
}

Complex wk_asymptotic(const RecurrenceParams& p, Complex x, int k, int n) {
  if (k < 1 || n < 1) throw InvalidInputError("wk_asymptotic needs k, n >= 1");
  check_x(x);
  CaseTag tag = p.case_tag();
  if (tag == CaseTag::IA || tag == CaseTag::IB || tag == CaseTag::IC) {
    Complex u = x - p.d * static_cast<double>(k);
    Complex s = sqrt_quad(p.a * k, u);  // sqrt((x-dk)^2 - 4ak)
    Complex s2 = u * u - 4.0 * (p.a * k);
    return (u + s) / 2.0 * (1.0 + p.d / (2.0 * s) + (p.d * x - p.d * p.d * k) / (2.0 * s2));
  }
  if (tag == CaseTag::IIA || tag == CaseTag::IIB) {
    Complex s = sqrt_quad(p.a * k, x);  // sqrt(x^2 - 4ak)
    Complex s2 = x * x - 4.0 * (p.a * k);
    return (x + s) / 2.0 * (1.0 + p.a / s2 - 2.0 * p.b / ((x + s) * s));
  }
  throw InvalidInputError("wk_asymptotic requires case I or cases IIA/IIB");
}

ScaledComplex mul_i_pow(const ScaledComplex& v, long k) {
  if (v.is_zero()) return v;
  long m = ((k % 4) + 4) % 4;
  Complex w = v.mantissa();
  switch (m) {
    case 1: w = Complex(-w.imag(), w.real()); break;
    case 2: w = -w; break;
    case 3: w = Complex(w.imag(), -w.real()); break;
    default: break;
  }
  return ScaledComplex::normalized(w, v.exp2());
}

}  // namespace prasymp
