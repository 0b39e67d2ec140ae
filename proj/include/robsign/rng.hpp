#pragma once

#include <cmath>
#include <cstdint>

namespace robsign {

// Counter-based generator: draw k is a hash of (seed, k), so streams can be
// split deterministically and are identical on every platform.  The mixing
// function is the SplitMix64 finalizer.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : key_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t next_u64() {
        counter_ += 0x9E3779B97F4A7C15ull;
        return mix(key_ + counter_);
    }

    // Uniform on the open interval (0, 1); never returns an endpoint.
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller (one draw per call, no caching so the
    // stream position stays a pure function of the call count).
    double next_normal() {
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    // Gamma(shape k >= 1, scale 1), Marsaglia-Tsang squeeze.
    double next_gamma(double k) {
        const double d = k - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = next_normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            const double u = next_uniform();
            if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
        }
    }

    double next_chisq(double dof) { return 2.0 * next_gamma(0.5 * dof); }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Derive an independent stream for sub-task `index` (replications, rows,
// batches).  Stable under reordering of the parallel schedule.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
    return CounterRng::mix(seed ^ CounterRng::mix(index + 0x9E3779B97F4A7C15ull));
}

}  // namespace robsign
