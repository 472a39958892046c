#pragma once

// Minimal fork-join helper. Results must be merged deterministically by the
// caller (per-index slots or a post-merge sort), never by completion order.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace qsdna {

inline int default_jobs() {
    if (const char* env = std::getenv("QSDNA_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 1;
}

// Splits [0, count) into contiguous chunks, one per worker.
inline void parallel_for(int jobs, size_t count,
                         const std::function<void(size_t, size_t)>& body) {
    if (count == 0) return;
    size_t workers = std::min<size_t>(std::max(jobs, 1), count);
    if (workers <= 1) {
        body(0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr error;
    std::mutex error_mutex;
    size_t chunk = (count + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
        size_t lo = w * chunk;
        size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                body(lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace qsdna
