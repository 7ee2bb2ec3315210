#ifndef RIBBONKNOT_PARALLEL_HPP
#define RIBBONKNOT_PARALLEL_HPP

/// Execution policy for the data-parallel kernels (width sweeps, optimizer
/// restarts).  Every kernel has identical output under both policies; the
/// serial path is the reference implementation and the tests compare the
/// two bitwise.  Parallel falls back to serial when the library was built
/// without OpenMP.

#include <cstddef>

#ifdef RIBBONKNOT_HAVE_OPENMP
#include <omp.h>
#endif

namespace ribbonknot {

enum class Execution { Serial, Parallel };

/// Runs f(i) for i in [0, count).  Iterations must be independent.
template <typename F>
void parallel_for(std::size_t count, Execution exec, F&& f) {
#ifdef RIBBONKNOT_HAVE_OPENMP
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            f(static_cast<std::size_t>(i));
        }
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < count; ++i) f(i);
}

}  // namespace ribbonknot

#endif
