#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace prasymp {

// Thread budget: PRASYMP_THREADS wins, then OpenMP's default; 1 without OpenMP.
inline int max_threads() {
  if (const char* s = std::getenv("PRASYMP_THREADS")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Index loop with a barrier at the end. Bodies write disjoint slots and must
// not let exceptions escape (catch into a slot, rethrow after the barrier).
template <class F>
void parallel_for(int count, F&& body) {
#ifdef _OPENMP
  const int nt = max_threads();
  if (nt > 1 && count > 1) {
#pragma omp parallel for num_threads(nt) schedule(static)
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
#endif
  for (int i = 0; i < count; ++i) body(i);
}

}  // namespace prasymp
