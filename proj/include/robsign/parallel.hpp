#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace robsign::par {

// Worker cap shared by every kernel; 0 means "use the OpenMP default".
int max_threads();
void set_max_threads(int n);

// Serial reference switch.  When off, every kernel below runs the identical
// block loop on one thread, so outputs must match the parallel path bitwise.
bool enabled();
void set_enabled(bool on);

inline constexpr std::ptrdiff_t kBlock = 1024;

namespace detail {
inline int clamp_threads() {
#ifdef _OPENMP
    const int cap = max_threads();
    return cap > 0 ? cap : omp_get_max_threads();
#else
    return 1;
#endif
}
}  // namespace detail

// Deterministic sum of body(i) over i in [0, n).  The range is cut into
// fixed-size blocks; each block accumulates sequentially and blocks combine
// in index order, so the result is independent of the thread count.
// Acc needs: copy construction from `zero` and operator+=.
template <class Acc, class Body>
Acc blocked_sum(std::ptrdiff_t n, const Acc& zero, Body&& body) {
    if (n <= 0) return zero;
    const std::ptrdiff_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<Acc> partial(static_cast<std::size_t>(nblocks), zero);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(detail::clamp_threads()) \
    if (enabled() && nblocks > 1)
#endif
    for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
        Acc local = zero;
        const std::ptrdiff_t hi = std::min(n, (b + 1) * kBlock);
        for (std::ptrdiff_t i = b * kBlock; i < hi; ++i) body(local, i);
        partial[static_cast<std::size_t>(b)] = std::move(local);
    }
    Acc total = zero;
    for (std::ptrdiff_t b = 0; b < nblocks; ++b) total += partial[static_cast<std::size_t>(b)];
    return total;
}

// Independent per-index work (each index owns its output slot).
template <class Body>
void parallel_for(std::ptrdiff_t n, Body&& body) {
    if (n <= 0) return;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(detail::clamp_threads()) \
    if (enabled() && n > 1)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
}

}  // namespace robsign::par
