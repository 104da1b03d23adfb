#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

// Shared draw helpers for the test suites. Every generator takes an explicit
// engine so each TEST_CASE owns a fixed-seed stream and stays order-independent.
namespace testsup {

using Complex = std::complex<double>;

inline std::mt19937_64 rng(std::uint64_t seed = 0x5eed5eed5eedULL) {
  return std::mt19937_64(seed);
}

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline Complex box(std::mt19937_64& g, double re_lo, double re_hi, double im_lo,
                   double im_hi) {
  return Complex(uniform(g, re_lo, re_hi), uniform(g, im_lo, im_hi));
}

// Nonzero mantissa-sized complex, both components O(1).
inline Complex unit_box(std::mt19937_64& g) {
  for (;;) {
    Complex w = box(g, -2.0, 2.0, -2.0, 2.0);
    if (std::abs(w) > 1e-3) return w;
  }
}

inline double rel_diff(Complex u, Complex v) {
  double m = std::abs(v);
  return m == 0.0 ? std::abs(u) : std::abs(u - v) / m;
}

}  // namespace testsup
