#pragma once

#include <vector>

#include "prasymp/recurrence.hpp"

namespace prasymp {

// Batch kernels. The _serial versions are the reference implementations; the
// _parallel versions split over points and must return bit-identical vectors
// (each point is an independent pure evaluation, no reductions involved).
std::vector<ScaledComplex> eval_grid_serial(const RecurrenceParams& p,
                                            const std::vector<Complex>& xs, int n);
std::vector<ScaledComplex> eval_grid_parallel(const RecurrenceParams& p,
                                              const std::vector<Complex>& xs, int n);

std::vector<double> residual_grid_serial(double A, const std::vector<Complex>& zs);
std::vector<double> residual_grid_parallel(double A, const std::vector<Complex>& zs);

}  // namespace prasymp
