#pragma once
// Execution-mode switch for the data-parallel kernels. Parallel runs write
// results into preassigned slots, so serial and parallel modes produce
// bit-identical output; tests and the benchmark rely on that.

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nlgames {

enum class ExecMode { serial, parallel };

template <typename F>
void parallel_for(long n, ExecMode mode, F&& fn) {
  if (mode == ExecMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) fn(i);
    return;
#endif
  }
  for (long i = 0; i < n; ++i) fn(i);
}

inline bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace nlgames
