#include "prasymp/grid.hpp"

#include <exception>

#include "prasymp/curve.hpp"
#include "prasymp/parallel.hpp"

namespace prasymp {

std::vector<ScaledComplex> eval_grid_serial(const RecurrenceParams& p,
                                            const std::vector<Complex>& xs, int n) {
  std::vector<ScaledComplex> out(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) out[i] = eval_pi(p, xs[i], n).value;
  return out;
}

std::vector<ScaledComplex> eval_grid_parallel(const RecurrenceParams& p,
                                              const std::vector<Complex>& xs, int n) {
  const int m = static_cast<int>(xs.size());
  std::vector<ScaledComplex> out(m);
  std::vector<std::exception_ptr> errs(m);
  parallel_for(m, [&](int i) {
    try {
      out[i] = eval_pi(p, xs[i], n).value;
    } catch (...) {
      errs[i] = std::current_exception();
    }
  });
  for (const std::exception_ptr& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<double> residual_grid_serial(double A, const std::vector<Complex>& zs) {
  std::vector<double> out(zs.size());
  for (size_t i = 0; i < zs.size(); ++i) out[i] = gamma_residual(A, zs[i]);
  return out;
}

std::vector<double> residual_grid_parallel(double A, const std::vector<Complex>& zs) {
  const int m = static_cast<int>(zs.size());
  std::vector<double> out(m);
  std::vector<std::exception_ptr> errs(m);
  parallel_for(m, [&](int i) {
    try {
      out[i] = gamma_residual(A, zs[i]);
    } catch (...) {
      errs[i] = std::current_exception();
    }
  });
  for (const std::exception_ptr& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace prasymp
