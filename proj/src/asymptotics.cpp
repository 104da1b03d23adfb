#include "prasymp/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <map>
#include <mutex>

#include "prasymp/branch.hpp"
#include "prasymp/errors.hpp"

namespace prasymp {

std::string to_string(Region::Kind k) {
  switch (k) {
    case Region::Kind::Outer: return "Outer";
    case Region::Kind::OscillatoryBulk: return "OscillatoryBulk";
    case Region::Kind::OscillatoryLeft: return "OscillatoryLeft";
    case Region::Kind::CurveNeighborhood: return "CurveNeighborhood";
    case Region::Kind::TurningPointExcluded: return "TurningPointExcluded";
  }
  return "?";
}

const CurvePolyline& cached_curve(double A) {
  static std::map<double, CurvePolyline> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(A);
  if (it == cache.end()) it = cache.emplace(A, trace_gamma(A, 512, 1e-10)).first;
  return it->second;
}

namespace {

using Kind = Region::Kind;

constexpr double kPi = 3.14159265358979323846;

double dist_real_seg(Complex p, double lo, double hi) {
  return std::hypot(p.real() - std::clamp(p.real(), lo, hi), p.imag());
}

double dist_points(Complex p, std::initializer_list<Complex> ts) {
  double m = std::numeric_limits<double>::infinity();
  for (Complex t : ts) m = std::min(m, std::abs(p - t));
  return m;
}

Region make(Kind k, double margin) { return Region{k, margin}; }

void check_case(const RecurrenceParams& p, CaseTag want) {
  if (p.needs_reflection())
    throw InvalidInputError("reflect d < 0 away (x -> -x) before evaluating");
  if (p.case_tag() != want)
    throw InvalidInputError("coefficients are case " + to_string(p.case_tag()) +
                            ", formula is for case " + to_string(want));
}

void check_n(int n) {
  if (n < 1) throw InvalidInputError("asymptotic evaluation needs n >= 1");
}

void reject_excluded(const Region& r) {
  if (r.kind == Kind::TurningPointExcluded)
    throw RegionError("point lies in an excluded turning-point neighborhood");
}

[[noreturn]] void wrong_region(const Region& r) {
  throw RegionError("no formula applies in region " + to_string(r.kind) +
                    " for this case");
}

// Factors of one main term accumulated as a single complex log; one
// exponentiation at the end keeps n^n-sized products inside the scaled range.
struct LogProduct {
  Complex L{0.0, 0.0};
  void pow(Complex base, Complex expo) { L += expo * principal_log(base); }
  void pow(Complex base, double expo) { L += expo * principal_log(base); }
  void exp_term(Complex t) { L += t; }
  ScaledComplex done() const { return ScaledComplex::from_log(L); }
};

// Oscillatory main terms: smooth part times 2 cos(theta). The cosine is kept
// out of the log so phase zeros cost nothing.
ScaledComplex times_cos(const LogProduct& lp, Complex theta) {
  return lp.done() * ScaledComplex::from(2.0 * std::cos(theta));
}

ScaledComplex ia_outer_branch(const RecurrenceParams& p, int n, Complex z, Complex phi) {
  const double rn = std::sqrt(double(n)), d = p.d, a = p.a, d2 = d * d;
  const Complex snz = rn * d + z;
  LogProduct lp;
  lp.exp_term(Complex(n * (std::log(double(n)) - 1.0), 0.0));
  lp.pow((z + phi) / (2.0 * rn), double(n));
  lp.pow((z + phi) / (2.0 * snz), Complex(-a / d2, 0.0) - rn * snz / d);
  lp.pow(snz / phi, 0.5);
  lp.exp_term((2.0 * a - z * z - 4.0 * rn * d * z + (z + 4.0 * rn * d) * phi) /
              (4.0 * d2));
  return lp.done();
}

ScaledComplex ib_outer_branch(const RecurrenceParams& p, int n, Complex z, Complex phi) {
  const double rn = std::sqrt(double(n)), d = p.d, A = p.A(), d2 = d * d;
  const Complex snz = rn * d + z;
  LogProduct lp;
  lp.exp_term(Complex(n * (std::log(double(n)) - 1.0), 0.0));
  lp.pow((z + phi) / (2.0 * rn), Complex(A / d2, 0.0) - rn * z / d);
  lp.pow(d + z / rn, Complex(-A / d2, 0.0) + rn * snz / d);
  lp.pow(snz / phi, 0.5);
  lp.exp_term((-2.0 * A - z * z - 4.0 * rn * d * z + (z + 4.0 * rn * d) * phi) /
              (4.0 * d2));
  return lp.done();
}

ScaledComplex iia_outer_branch(double a, double b, int n, Complex y, Complex phi) {
  LogProduct lp;
  lp.exp_term(Complex(0.5 * n * (std::log(0.25 * n) - 1.0), 0.0));
  lp.pow(y + phi, double(n));
  lp.pow((y + phi) / (2.0 * phi), 0.5);
  lp.pow((y + phi) / (2.0 * y), b / a);
  lp.exp_term(double(n) * y * (y - phi) / (4.0 * a));
  return lp.done();
}

}  // namespace

Region classify_region(const RecurrenceParams& p, int n, Complex pt, double delta) {
  if (p.needs_reflection())
    throw InvalidInputError("reflect d < 0 away (x -> -x) before classifying");
  if (n < 1) throw InvalidInputError("region classification needs n >= 1");
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw InvalidInputError("delta must be positive and finite");
  if (!std::isfinite(pt.real()) || !std::isfinite(pt.imag()))
    throw InvalidInputError("point must be finite");
  const double rn = std::sqrt(double(n));
  switch (p.case_tag()) {
    case CaseTag::IA: {
      const double ra = 2.0 * std::sqrt(p.a), rd = rn * p.d;
      const double dtp =
          dist_points(pt, {Complex(-rd, 0.0), Complex(-ra, 0.0), Complex(ra, 0.0)});
      if (dtp <= delta) return make(Kind::TurningPointExcluded, delta - dtp);
      const double dbulk = dist_real_seg(pt, -ra, ra);
      if (dbulk < delta)
        return make(Kind::OscillatoryBulk, std::min(delta - dbulk, dtp - delta));
      const double dleft = dist_real_seg(pt, -rd, -ra);
      if (dleft < delta)
        return make(Kind::OscillatoryLeft, std::min(delta - dleft, dtp - delta));
      return make(Kind::Outer, std::min(dbulk, dleft) - delta);
    }
    case CaseTag::IB: {
      const double A = p.A(), rd = rn * p.d, rA = 2.0 * std::sqrt(A);
      const CurvePolyline& curve = cached_curve(A);
      const double dtp = dist_points(pt, {Complex(-rd, 0.0), Complex(curve.zA, 0.0),
                                          Complex(0.0, rA), Complex(0.0, -rA)});
      if (dtp <= delta) return make(Kind::TurningPointExcluded, delta - dtp);
      const double dleft = dist_real_seg(pt, -rd, curve.zA);
      if (dleft < delta)
        return make(Kind::OscillatoryLeft, std::min(delta - dleft, dtp - delta));
      const double dcurve = distance_to_polyline(pt, curve.points);
      if (dcurve < delta)
        return make(Kind::CurveNeighborhood, std::min(delta - dcurve, dtp - delta));
      return make(Kind::Outer, std::min(dleft, dcurve) - delta);
    }
    case CaseTag::IC: {
      const double dtp = dist_points(pt, {Complex(0.0, 0.0), Complex(p.d, 0.0)});
      if (dtp <= delta) return make(Kind::TurningPointExcluded, delta - dtp);
      const double dint = dist_real_seg(pt, 0.0, p.d);
      if (dint < delta)
        return make(Kind::OscillatoryBulk, std::min(delta - dint, dtp - delta));
      return make(Kind::Outer, dint - delta);
    }
    case CaseTag::IIA:
    case CaseTag::IIB: {
      const double r =
          2.0 * std::sqrt(p.case_tag() == CaseTag::IIA ? p.a : p.A());
      // y = 0 is excluded: the (sqrt(a)/y)^(b/a) factor blows up there.
      const double dtp =
          dist_points(pt, {Complex(-r, 0.0), Complex(0.0, 0.0), Complex(r, 0.0)});
      if (dtp <= delta) return make(Kind::TurningPointExcluded, delta - dtp);
      const double dbulk = dist_real_seg(pt, 0.0, r);
      if (dbulk < delta)
        return make(Kind::OscillatoryBulk, std::min(delta - dbulk, dtp - delta));
      const double dleft = dist_real_seg(pt, -r, 0.0);
      if (dleft < delta)
        return make(Kind::OscillatoryLeft, std::min(delta - dleft, dtp - delta));
      return make(Kind::Outer, std::min(dbulk, dleft) - delta);
    }
    case CaseTag::IIC: {
      if (!(p.b > 0.0)) throw InvalidInputError("case with d = a = 0 needs b > 0");
      const Complex xh = pt / (2.0 * std::sqrt(p.b));
      const double dtp = dist_points(xh, {Complex(-1.0, 0.0), Complex(1.0, 0.0)});
      if (dtp <= delta) return make(Kind::TurningPointExcluded, delta - dtp);
      const double dint = dist_real_seg(xh, -1.0, 1.0);
      if (dint < delta)
        return make(Kind::OscillatoryBulk, std::min(delta - dint, dtp - delta));
      return make(Kind::Outer, dint - delta);
    }
  }
  throw InvalidInputError("unreachable");
}

AsymptoticValue asym_IA(const RecurrenceParams& p, int n, Complex z, const Region& region) {
  check_case(p, CaseTag::IA);
  check_n(n);
  reject_excluded(region);
  const double rn = std::sqrt(double(n)), d = p.d, a = p.a, d2 = p.d * p.d;
  const double sa = std::sqrt(a);
  switch (region.kind) {
    case Kind::Outer: {
      const Complex phi = sqrt_quad(a, z);
      // The kernel's cut coincides with the formula's cut here, so the
      // principal evaluation is already the analytic (dominant) solution
      // everywhere off the cut. The sign-flipped companion is reported for
      // diagnostics; near the right real ray it is not a solution at all and
      // can exceed the true value, so it must never be selected by magnitude.
      ScaledComplex up = ia_outer_branch(p, n, z, phi);
      ScaledComplex um = ia_outer_branch(p, n, z, -phi);
      return {up, region, std::make_pair(up, um)};
    }
    case Kind::OscillatoryBulk: {
      const Complex snz = rn * d + z;
      const Complex sq = std::sqrt(4.0 * a - z * z);
      LogProduct lp;
      lp.exp_term(Complex(n * (std::log(double(n)) - 1.0), 0.0));
      lp.pow(Complex(sa / rn, 0.0), Complex(-a / d2, 0.0) - rn * z / d);
      lp.pow(d + z / rn, Complex(a / d2, 0.0) + rn * snz / d);
      lp.pow(snz / sq, 0.5);
      lp.exp_term((2.0 * a - z * z - 4.0 * rn * d * z) / (4.0 * d2));
      const Complex theta =
          (Complex(double(n) - a / d2, 0.0) - rn * snz / d) *
              arccos_branch(z / (2.0 * sa)) -
          kPi / 4.0 + (z + 4.0 * rn * d) * sq / (4.0 * d2);
      return {times_cos(lp, theta), region, std::nullopt};
    }
    case Kind::OscillatoryLeft: {
      const Complex snz = rn * d + z;
      const Complex K = std::sqrt(-z - 2.0 * sa) * std::sqrt(-z + 2.0 * sa);
      LogProduct lp;
      lp.exp_term(Complex(n * (std::log(double(n)) - 1.0), 0.0));
      lp.pow((-z + K) / (2.0 * rn), Complex(-a / d2, 0.0) - rn * z / d);
      lp.pow(d + z / rn, Complex(a / d2, 0.0) + rn * snz / d);
      lp.pow(snz / K, 0.5);
      lp.exp_term((2.0 * a - z * z - 4.0 * rn * d * z - (z + 4.0 * rn * d) * K) /
                  (4.0 * d2));
      const Complex theta = kPi * (Complex(-a / d2 - 0.5, 0.0) - rn * z / d);
      return {times_cos(lp, theta), region, std::nullopt};
    }
    default:
      wrong_region(region);
  }
}

AsymptoticValue asym_IB(const RecurrenceParams& p, int n, Complex z, const Region& region) {
  check_case(p, CaseTag::IB);
  check_n(n);
  reject_excluded(region);
  const double rn = std::sqrt(double(n)), d = p.d, A = p.A(), d2 = p.d * p.d;
  const double sA = std::sqrt(A);
  switch (region.kind) {
    case Kind::Outer: {
      const Complex phi = sqrt_quad(p.a, z);
      // The kernel is cut on the straight segment between +-2i*sqrt(A) but
      // this formula's natural cut is the curved Y-set. Between the two
      // (the pocket around the origin bounded by the curve) the principal
      // evaluation lands on the recessive sheet, so take whichever sign of
      // the kernel gives the larger magnitude; that reconstructs the
      // curved-cut branch. Caveat: on the imaginary rays beyond the curve
      // tips both evaluations stay comparable for all n.
      ScaledComplex up = ib_outer_branch(p, n, z, phi);
      ScaledComplex um = ib_outer_branch(p, n, z, -phi);
      return {up.log_abs() >= um.log_abs() ? up : um, region, std::make_pair(up, um)};
    }
    case Kind::OscillatoryLeft: {
      const Complex snz = rn * d + z;
      const Complex K =
          std::sqrt(-z - Complex(0.0, 2.0 * sA)) * std::sqrt(-z + Complex(0.0, 2.0 * sA));
      LogProduct lp;
      lp.exp_term(Complex(n * (std::log(double(n)) - 1.0), 0.0));
      lp.pow((-z + K) / (2.0 * rn), Complex(A / d2, 0.0) - rn * z / d);
      lp.pow(d + z / rn, Complex(-A / d2, 0.0) + rn * snz / d);
      lp.pow(snz / K, 0.5);
      lp.exp_term((-2.0 * A - z * z - 4.0 * rn * d * z - (z + 4.0 * rn * d) * K) /
                  (4.0 * d2));
      const Complex theta = kPi * (Complex(A / d2 - 0.5, 0.0) - rn * z / d);
      return {times_cos(lp, theta), region, std::nullopt};
    }
    case Kind::CurveNeighborhood: {
      // Both exponential terms are the same size here; keep them both. The sum
      // is invariant under phi -> -phi (the terms swap), so the kernel's sign
      // convention does not matter.
      const Complex phi = sqrt_quad(p.a, z);
      const Complex snz = rn * d + z;
      const Complex EB = Complex(A / d2, 0.0) - rn * z / d;
      Complex base(n * (0.5 * std::log(double(n)) - 1.0), 0.0);
      base += (Complex(-A / d2 + 0.5, 0.0) + rn * snz / d) * principal_log(snz);
      base += (-2.0 * A - z * z - 4.0 * rn * d * z) / (4.0 * d2);
      const Complex w = (z + 4.0 * rn * d) * phi / (4.0 * d2);
      ScaledComplex tp = ScaledComplex::from_log(
          base + EB * principal_log((z + phi) / 2.0) - 0.5 * principal_log(phi) + w);
      ScaledComplex tm = ScaledComplex::from_log(
          base + EB * principal_log((z - phi) / 2.0) - 0.5 * principal_log(-phi) - w);
      return {tp + tm, region, std::make_pair(tp, tm)};
    }
    default:
      wrong_region(region);
  }
}

AsymptoticValue asym_IC(const RecurrenceParams& p, int n, Complex y, const Region& region) {
  check_case(p, CaseTag::IC);
  check_n(n);
  reject_excluded(region);
  const double d = p.d;
  switch (region.kind) {
    case Kind::Outer: {
      LogProduct lp;
      lp.exp_term(Complex(n * (std::log(double(n)) - 1.0), 0.0));
      lp.pow(y / (y - d), double(n) * y / d + 0.5);
      lp.pow(y - d, double(n));
      return {lp.done(), region, std::nullopt};
    }
    case Kind::OscillatoryBulk: {
      LogProduct lp;
      lp.exp_term(Complex(n * (std::log(double(n)) - 1.0), 0.0));
      lp.pow(d - y, double(n));
      lp.pow(y / (d - y), double(n) * y / d + 0.5);
      const Complex theta = kPi * (double(n) - double(n) * y / d - 0.5);
      return {times_cos(lp, theta), region, std::nullopt};
    }
    default:
      wrong_region(region);
  }
}

AsymptoticValue asym_IIA(const RecurrenceParams& p, int n, Complex y, const Region& region) {
  check_case(p, CaseTag::IIA);
  check_n(n);
  reject_excluded(region);
  const double a = p.a, b = p.b, sa = std::sqrt(p.a);
  switch (region.kind) {
    case Kind::Outer: {
      const Complex phi = sqrt_quad(a, y);
      // Straight cut == formula cut: principal evaluation is the value (see
      // the matching comment in the d > 0 outer case).
      ScaledComplex up = iia_outer_branch(a, b, n, y, phi);
      ScaledComplex um = iia_outer_branch(a, b, n, y, -phi);
      return {up, region, std::make_pair(up, um)};
    }
    case Kind::OscillatoryBulk:
    case Kind::OscillatoryLeft: {
      const bool left = region.kind == Kind::OscillatoryLeft;
      const Complex K = std::sqrt(2.0 * sa - y) * std::sqrt(2.0 * sa + y);
      LogProduct lp;
      lp.exp_term(Complex(0.5 * n * (std::log(double(n) * a) - 1.0), 0.0));
      lp.pow(sa / K, 0.5);
      lp.pow(left ? sa / (-y) : sa / y, b / a);
      lp.exp_term(double(n) * y * y / (4.0 * a));
      Complex theta = (double(n) + 0.5 + b / a) * arccos_branch((left ? -y : y) / (2.0 * sa)) -
                      kPi / 4.0;
      theta += (left ? 1.0 : -1.0) * double(n) * y * K / (4.0 * a);
      ScaledComplex v = times_cos(lp, theta);
      if (left && (n & 1)) v = -v;
      return {v, region, std::nullopt};
    }
    default:
      wrong_region(region);
  }
}

AsymptoticValue asym_IIB(const RecurrenceParams& p, int n, Complex y, const Region& region) {
  check_case(p, CaseTag::IIB);
  check_n(n);
  reject_excluded(region);
  // pi_n(i sqrt(n) y) = i^n q_n(sqrt(n) y) with q the a > 0 recurrence at (A, B).
  RecurrenceParams q(0.0, p.A(), p.B());
  AsymptoticValue v = asym_IIA(q, n, y, region);
  v.value = mul_i_pow(v.value, n);
  if (v.branch_parts)
    v.branch_parts = std::make_pair(mul_i_pow(v.branch_parts->first, n),
                                    mul_i_pow(v.branch_parts->second, n));
  return v;
}

AsymptoticValue asym_IIB_direct(const RecurrenceParams& p, int n, Complex y,
                                const Region& region) {
  check_case(p, CaseTag::IIB);
  check_n(n);
  reject_excluded(region);
  const double A = p.A(), B = p.B(), sA = std::sqrt(A);
  switch (region.kind) {
    case Kind::Outer: {
      const Complex phi = sqrt_quad(A, y);
      ScaledComplex up = mul_i_pow(iia_outer_branch(A, B, n, y, phi), n);
      ScaledComplex um = mul_i_pow(iia_outer_branch(A, B, n, y, -phi), n);
      return {up, region, std::make_pair(up, um)};
    }
    case Kind::OscillatoryBulk:
    case Kind::OscillatoryLeft: {
      const bool left = region.kind == Kind::OscillatoryLeft;
      const Complex K = std::sqrt(2.0 * sA - y) * std::sqrt(2.0 * sA + y);
      LogProduct lp;
      lp.exp_term(Complex(0.5 * n * (std::log(double(n) * A) - 1.0), 0.0));
      lp.pow(sA / K, 0.5);
      lp.pow(left ? sA / (-y) : sA / y, B / A);
      lp.exp_term(double(n) * y * y / (4.0 * A));
      Complex theta = (double(n) + 0.5 + B / A) * arccos_branch((left ? -y : y) / (2.0 * sA)) -
                      kPi / 4.0;
      theta += (left ? 1.0 : -1.0) * double(n) * y * K / (4.0 * A);
      ScaledComplex v = mul_i_pow(times_cos(lp, theta), n);
      if (left && (n & 1)) v = -v;
      return {v, region, std::nullopt};
    }
    default:
      wrong_region(region);
  }
}

AsymptoticValue asym_IIC(const RecurrenceParams& p, int n, Complex x, const Region& region) {
  check_case(p, CaseTag::IIC);
  check_n(n);
  reject_excluded(region);
  if (!(p.b > 0.0)) throw InvalidInputError("case with d = a = 0 needs b > 0");
  const double s = 2.0 * std::sqrt(p.b);  // exactly 1 when b = 1/4
  const Complex xh = x / s;
  if (xh == Complex(1.0, 0.0) || xh == Complex(-1.0, 0.0))
    throw SingularError("evaluation degenerates at the interval endpoints");
  const double ls = std::log(s);
  switch (region.kind) {
    case Kind::Outer: {
      const Complex phi = sqrt_quad(0.25, xh);
      auto branch = [&](Complex ph) {
        Complex L(double(n) * ls, 0.0);
        L += (double(n) + 1.0) * principal_log((xh + ph) / 2.0);
        L -= principal_log(ph);
        return ScaledComplex::from_log(L);
      };
      ScaledComplex up = branch(phi), um = branch(-phi);
      return {up, region, std::make_pair(up, um)};
    }
    case Kind::OscillatoryBulk: {
      const Complex w =
          std::sin((double(n) + 1.0) * arccos_branch(xh)) / std::sqrt(1.0 - xh * xh);
      // 2^-n stays exact in the exponent; the b = 1/4 prefactor is exactly 1.
      ScaledComplex v =
          ScaledComplex::from(w) * ScaledComplex::normalized(Complex(1.0, 0.0), -n);
      if (ls != 0.0) v = v * ScaledComplex::from_log(Complex(double(n) * ls, 0.0));
      return {v, region, std::nullopt};
    }
    default:
      wrong_region(region);
  }
}

AsymptoticValue asym_eval(const RecurrenceParams& p, int n, Complex point,
                          const Region& region) {
  if (p.needs_reflection())
    throw InvalidInputError("reflect d < 0 away (x -> -x) before evaluating");
  switch (p.case_tag()) {
    case CaseTag::IA: return asym_IA(p, n, point, region);
    case CaseTag::IB: return asym_IB(p, n, point, region);
    case CaseTag::IC: return asym_IC(p, n, point, region);
    case CaseTag::IIA: return asym_IIA(p, n, point, region);
    case CaseTag::IIB: return asym_IIB(p, n, point, region);
    case CaseTag::IIC: return asym_IIC(p, n, point, region);
  }
  throw InvalidInputError("unreachable");
}

double oscillatory_phase(const RecurrenceParams& p, int n, Complex point) {
  if (p.needs_reflection())
    throw InvalidInputError("reflect d < 0 away (x -> -x) first");
  if (point.imag() != 0.0)
    throw InvalidInputError("phase is defined for real oscillatory coordinates");
  check_n(n);
  Region r = classify_region(p, n, point);
  if (r.kind != Kind::OscillatoryBulk && r.kind != Kind::OscillatoryLeft)
    throw RegionError("point is not in an oscillatory region");
  const double t = point.real(), rn = std::sqrt(double(n));
  switch (p.case_tag()) {
    case CaseTag::IA: {
      const double a = p.a, d = p.d, d2 = d * d, sa = std::sqrt(a);
      if (r.kind == Kind::OscillatoryBulk)
        return (n - a / d2 - rn * (rn * d + t) / d) * std::acos(t / (2.0 * sa)) -
               kPi / 4.0 + (t + 4.0 * rn * d) * std::sqrt(4.0 * a - t * t) / (4.0 * d2);
      return kPi * (-a / d2 - rn * t / d - 0.5);
    }
    case CaseTag::IB:
      return kPi * (p.A() / (p.d * p.d) - rn * t / p.d - 0.5);
    case CaseTag::IC:
      return kPi * (n - double(n) * t / p.d - 0.5);
    case CaseTag::IIA:
    case CaseTag::IIB: {
      const double a = p.case_tag() == CaseTag::IIA ? p.a : p.A();
      const double b = p.case_tag() == CaseTag::IIA ? p.b : p.B();
      const double sa = std::sqrt(a), K = std::sqrt(4.0 * a - t * t);
      if (r.kind == Kind::OscillatoryBulk)
        return (n + 0.5 + b / a) * std::acos(t / (2.0 * sa)) - kPi / 4.0 -
               n * t * K / (4.0 * a);
      return (n + 0.5 + b / a) * std::acos(-t / (2.0 * sa)) - kPi / 4.0 +
             n * t * K / (4.0 * a);
    }
    case CaseTag::IIC:
      return (n + 1.0) * std::acos(t / (2.0 * std::sqrt(p.b)));
  }
  throw InvalidInputError("unreachable");
}

Complex unscale_point(const RecurrenceParams& p, int n, Complex point) {
  if (p.needs_reflection())
    throw InvalidInputError("reflect d < 0 away (x -> -x) first");
  check_n(n);
  const double rn = std::sqrt(double(n));
  switch (p.case_tag()) {
    case CaseTag::IA:
    case CaseTag::IB: return double(n) * p.d + rn * point;
    case CaseTag::IC: return double(n) * point;
    case CaseTag::IIA: return rn * point;
    case CaseTag::IIB: return Complex(0.0, rn) * point;
    case CaseTag::IIC: return point;
  }
  throw InvalidInputError("unreachable");
}

}  // namespace prasymp
