#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace domforge {

// worker count resolution: explicit argument, else DOMFORGE_WORKERS, else
// hardware concurrency
inline int resolve_workers(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DOMFORGE_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Splits [0, total) into one contiguous chunk per worker and runs
// work(worker_index, lo, hi) concurrently. Results are merged by the caller
// in worker-index order, which is what keeps sweep reports byte-identical
// across worker counts.
template <class Work>
inline void run_partitioned(std::uint64_t total, int workers, Work&& work) {
    workers = resolve_workers(workers);
    if (static_cast<std::uint64_t>(workers) > total) workers = total ? static_cast<int>(total) : 1;
    if (workers <= 1) {
        work(0, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t lo = std::min(total, chunk * w);
        std::uint64_t hi = std::min(total, lo + chunk);
        pool.emplace_back([&work, w, lo, hi] { work(w, lo, hi); });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace domforge
