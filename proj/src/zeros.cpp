#include "prasymp/zeros.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "prasymp/errors.hpp"
#include "prasymp/parallel.hpp"

namespace prasymp {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Seeds interleave a jittered enclosing circle with points on the limiting
// zero locus of the case at hand; d < 0 mirrors the reflected layout.
std::vector<Complex> initial_guesses(const RecurrenceParams& p, int n) {
  if (p.needs_reflection()) {
    std::vector<Complex> g = initial_guesses(p.reflected(), n);
    for (Complex& v : g) v = -v;
    return g;
  }
  const double R =
      1.1 * std::max(2.0 * std::sqrt(std::abs(p.a) * n) + std::abs(p.d) * n, 1.0);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> jit(-0.03, 0.03);
  const CaseTag tag = p.case_tag();
  double stem_end = 0.0;
  CurvePolyline arms;
  if (tag == CaseTag::IB) {
    arms = trace_gamma(p.A());
    stem_end = n * p.d + std::sqrt(double(n)) * arms.zA;
  }
  auto locus = [&](double t) -> Complex {  // t in (0,1)
    switch (tag) {
      case CaseTag::IA:
        return Complex(t * (n * p.d + 2.0 * std::sqrt(p.a * n)), 0.0);
      case CaseTag::IB: {
        if (t < 0.5) return Complex(2.0 * t * stem_end, 0.0);
        // curve arms, traversed upper tip -> junction -> lower tip
        const double s = 2.0 * (t - 0.5);
        const size_t i = std::min(arms.points.size() - 1,
                                  size_t(s * double(arms.points.size())));
        return double(n) * p.d + std::sqrt(double(n)) * arms.points[i];
      }
      case CaseTag::IC:
        return Complex(t * n * p.d, 0.0);
      case CaseTag::IIA:
        return Complex((2.0 * t - 1.0) * 2.0 * std::sqrt(p.a * n), 0.0);
      case CaseTag::IIB:
        return Complex(0.0, (2.0 * t - 1.0) * 2.0 * std::sqrt(p.A() * n));
      case CaseTag::IIC: {
        const double r = 2.0 * std::sqrt(std::abs(p.b));
        return p.b >= 0.0 ? Complex((2.0 * t - 1.0) * r, 0.0)
                          : Complex(0.0, (2.0 * t - 1.0) * r);
      }
    }
    return Complex(0.0, 0.0);
  };
  std::vector<Complex> g;
  g.reserve(n);
  for (int k = 0; k < n; ++k) {
    if (k % 2 == 0) {
      const double th = 2.0 * kPi * (k + 0.5) / n + jit(rng);
      g.push_back(R * Complex(std::cos(th), std::sin(th)));
    } else {
      g.push_back(locus((k + 0.5) / n) + Complex(jit(rng), jit(rng)));
    }
  }
  return g;
}

// For a < 0 the polynomial sits exponentially below the recurrence's dominant
// solution near the Y-set (depth grows like 6 bits per sqrt(n) past the
// junction), so double recursion has no digits left to pin the zeros. Same
// recurrence, wider mantissa; the Newton ratio is well conditioned, so it can
// be rounded back to a double for the sweep itself.
bool needs_widened_eval(const RecurrenceParams& p) {
  return p.case_tag() == CaseTag::IB;
}

int widened_bits(int n) {
  return 128 + 8 * static_cast<int>(std::ceil(std::sqrt(double(n))));
}

}  // namespace

ZeroSet find_zeros(const RecurrenceParams& p, int n, double tol, int maxiter) {
  if (n < 1) throw InvalidInputError("need n >= 1 zeros");
  if (!(tol > 0.0)) throw InvalidInputError("tol must be positive");
  if (maxiter < 1) throw InvalidInputError("maxiter must be positive");
  const bool widen = needs_widened_eval(p);
  const int wbits = widened_bits(n);
  std::vector<Complex> z = initial_guesses(p, n);
  std::vector<Complex> corr(n, Complex(0.0, 0.0));
  std::vector<char> frozen(n, 0), failed(n, 0);
  for (int it = 0; it < maxiter; ++it) {
    // Jacobi sweep: every correction reads the previous iterate only, so the
    // root loop can run in parallel with one barrier per iteration.
    parallel_for(n, [&](int i) {
      if (frozen[i]) {
        corr[i] = Complex(0.0, 0.0);
        return;
      }
      try {
        PolyValue pv = widen ? eval_pi_deriv_highprec(p, z[i], n, wbits)
                             : eval_pi_deriv(p, z[i], n);
        Complex N = pv.derivative->is_zero()
                        ? Complex(tol, tol)
                        : (pv.value / *pv.derivative).to_complex();
        Complex S(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          Complex dd = z[i] - z[j];
          if (std::abs(dd) < 1e-300) dd = Complex(1e-12, 1e-12);
          S += 1.0 / dd;
        }
        Complex delta = N / (1.0 - N * S);
        if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag())) delta = N;
        corr[i] = delta;
      } catch (...) {
        failed[i] = 1;
        corr[i] = Complex(0.0, 0.0);
      }
    });
    bool all = true;
    for (int i = 0; i < n; ++i) {
      if (failed[i]) throw SolverError("zero iteration left the finite domain");
      if (frozen[i]) continue;
      z[i] -= corr[i];
      if (std::abs(corr[i]) < tol * (1.0 + std::abs(z[i])))
        frozen[i] = 1;
      else
        all = false;
    }
    if (all) break;
  }
  std::vector<int> unconverged;
  for (int i = 0; i < n; ++i)
    if (!frozen[i]) unconverged.push_back(i);
  if (!unconverged.empty())
    throw ConvergenceError("root iteration stalled for " +
                               std::to_string(unconverged.size()) + " of " +
                               std::to_string(n) + " roots",
                           unconverged);

  std::sort(z.begin(), z.end(), [](Complex u, Complex v) {
    return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
  });
  ZeroSet out;
  out.params = p;
  out.n = n;
  out.zeros = std::move(z);
  out.residuals = zero_residuals(p, out.zeros);
  out.scaled.resize(n);
  const double rn = std::sqrt(double(n));
  for (int i = 0; i < n; ++i) {
    const Complex x = out.zeros[i];
    if (p.d != 0.0)
      out.scaled[i] = (x - double(n) * p.d) / rn;
    else if (p.case_tag() == CaseTag::IIB)
      out.scaled[i] = Complex(x.imag(), -x.real()) / rn;  // y = x / (i sqrt(n))
    else
      out.scaled[i] = x / rn;
  }
  return out;
}

std::vector<double> zero_residuals(const RecurrenceParams& p,
                                   const std::vector<Complex>& zeros) {
  const int n = static_cast<int>(zeros.size());
  const bool widen = needs_widened_eval(p);
  const int wbits = widened_bits(n);
  std::vector<double> res(n, 0.0);
  parallel_for(n, [&](int i) {
    double gap = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j)
      if (j != i) gap = std::min(gap, std::abs(zeros[i] - zeros[j]));
    if (n == 1) gap = 1.0;
    PolyValue pv = widen ? eval_pi_deriv_highprec(p, zeros[i], n, wbits)
                         : eval_pi_deriv(p, zeros[i], n);
    if (pv.derivative->is_zero()) {
      res[i] = std::numeric_limits<double>::infinity();
      return;
    }
    res[i] = std::abs((pv.value / *pv.derivative).to_complex()) / gap;
  });
  return res;
}

double zeros_vs_Yset(const RecurrenceParams& p, int n, const CurvePolyline& curve) {
  if (p.needs_reflection() || p.case_tag() != CaseTag::IB)
    throw InvalidInputError("Y-set comparison is for case IB (d > 0, a < 0)");
  const double A = p.A();
  const double rn = std::sqrt(double(n)), rA = 2.0 * std::sqrt(A);
  ZeroSet zs = find_zeros(p, n);
  const Complex tips[3] = {Complex(-rn * p.d, 0.0), Complex(0.0, rA),
                           Complex(0.0, -rA)};
  double worst = 0.0;
  for (Complex zeta : zs.scaled) {
    bool near_tip = false;
    for (Complex t : tips)
      if (std::abs(zeta - t) < 0.3) near_tip = true;
    if (near_tip) continue;
    worst = std::max(worst, distance_to_Yset(A, p.d, n, zeta, curve));
  }
  return worst;
}

std::vector<Complex> tridiagonal_zeros(const RecurrenceParams& p, int n) {
  if (n < 1) throw InvalidInputError("need n >= 1");
  if (n > 60) throw InvalidInputError("dense eigenvalue oracle capped at n = 60");
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) M(k, k) = p.d * k;
  for (int k = 0; k + 1 < n; ++k) {
    M(k + 1, k) = 1.0;
    M(k, k + 1) = p.a * (k + 1) + p.b;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(M);
  if (es.info() != Eigen::Success) throw SolverError("eigenvalue iteration failed");
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) z[k] = es.eigenvalues()[k];
  std::sort(z.begin(), z.end(), [](Complex u, Complex v) {
    return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
  });
  return z;
}

}  // namespace prasymp
