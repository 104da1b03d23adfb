// Timing comparison of the serial reference kernels against the OpenMP split,
// with an equality check (the two must agree bit for bit).
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "prasymp/grid.hpp"
#include "prasymp/parallel.hpp"

using namespace prasymp;

namespace {

template <class F>
double best_ms(F&& f, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 400;
  const int m = argc > 2 ? std::atoi(argv[2]) : 2000;
  RecurrenceParams p(1.0, -1.0, 0.5);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double rn = std::sqrt(double(n));

  std::vector<Complex> xs(m);
  for (Complex& x : xs) x = Complex(n * p.d + rn * 3.0 * u(rng), rn * u(rng));
  auto ref = eval_grid_serial(p, xs, n);
  auto par = eval_grid_parallel(p, xs, n);
  const bool eval_same = ref == par;
  const double ts = best_ms([&] { eval_grid_serial(p, xs, n); });
  const double tp = best_ms([&] { eval_grid_parallel(p, xs, n); });

  std::vector<Complex> zs(m * 4);
  for (Complex& z : zs) z = Complex(-2.5 + 2.0 * u(rng), 2.2 * u(rng));
  auto rref = residual_grid_serial(1.0, zs);
  auto rpar = residual_grid_parallel(1.0, zs);
  const bool res_same = rref == rpar;
  const double rs = best_ms([&] { residual_grid_serial(1.0, zs); });
  const double rp = best_ms([&] { residual_grid_parallel(1.0, zs); });

  std::cout << "threads: " << max_threads() << "\n";
  std::cout << "eval_grid     n=" << n << " points=" << m << "  serial " << ts
            << " ms  parallel " << tp << " ms  speedup " << ts / tp
            << "  identical=" << (eval_same ? "yes" : "NO") << "\n";
  std::cout << "residual_grid points=" << zs.size() << "  serial " << rs
            << " ms  parallel " << rp << " ms  speedup " << rs / rp
            << "  identical=" << (res_same ? "yes" : "NO") << "\n";
  return eval_same && res_same ? 0 : 1;
}
