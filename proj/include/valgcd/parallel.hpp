#ifndef VALGCD_PARALLEL_HPP
#define VALGCD_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace valgcd {

/// Worker count used by parallel enumerations: the value set via
/// set_worker_count (CLI --threads), else VALGCD_THREADS, else the hardware
/// concurrency. Always at least 1.
unsigned worker_count();
void set_worker_count(unsigned n);

/// Runs fn(chunk_index, begin, end) over a partition of [0, total) into
/// `chunks` contiguous ranges. Chunk indices identify ranges in ascending
/// order, so callers can merge per-chunk results deterministically. fn must
/// not touch shared mutable state.
template <typename Fn>
void parallel_chunks(std::uint64_t total, std::size_t chunks, Fn&& fn) {
    if (total == 0 || chunks == 0) return;
    unsigned workers = worker_count();
    if (workers <= 1 || chunks == 1) {
        std::uint64_t begin = 0;
        for (std::size_t i = 0; i < chunks; ++i) {
            std::uint64_t end = total * (i + 1) / chunks;
            fn(i, begin, end);
            begin = end;
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= chunks) return;
            std::uint64_t begin = total * i / chunks;
            std::uint64_t end = total * (i + 1) / chunks;
            fn(i, begin, end);
        }
    };
    std::vector<std::thread> pool;
    unsigned n = std::min<std::size_t>(workers, chunks);
    pool.reserve(n - 1);
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

/// Convenience partition: enough chunks to balance load without drowning in
/// merge work.
inline std::size_t default_chunks(std::uint64_t total) {
    std::size_t want = static_cast<std::size_t>(worker_count()) * 8;
    if (total < 4096) return 1;
    return want;
}

} // namespace valgcd

#endif
