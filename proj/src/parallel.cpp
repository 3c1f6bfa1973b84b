#include "valgcd/parallel.hpp"

#include <cstdlib>

namespace valgcd {

namespace {
unsigned g_workers = 0; // 0 = not set
}

unsigned worker_count() {
    if (g_workers > 0) return g_workers;
    if (const char* env = std::getenv("VALGCD_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void set_worker_count(unsigned n) { g_workers = n; }

} // namespace valgcd
