#include "robsign/parallel.hpp"

#include <atomic>

namespace robsign::par {

namespace {
std::atomic<int> g_max_threads{0};
std::atomic<bool> g_enabled{true};
}  // namespace

int max_threads() { return g_max_threads.load(std::memory_order_relaxed); }
void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n, std::memory_order_relaxed); }

bool enabled() { return g_enabled.load(std::memory_order_relaxed); }
void set_enabled(bool on) { g_enabled.store(on, std::memory_order_relaxed); }

}  // namespace robsign::par
