#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace nilrep {

/// Worker count resolution: explicit value wins, else QGR_THREADS, else 1.
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("QGR_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

/// Splits [0, n) into contiguous chunks, one worker per chunk. The callable
/// receives (begin, end); callers keep determinism by writing results into
/// pre-sized, index-addressed storage.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t, std::size_t)>& chunk) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n < 2) {
        chunk(0, n);
        return;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t per = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * per;
        std::size_t end = std::min(n, begin + per);
        if (begin >= end) break;
        pool.emplace_back(chunk, begin, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace nilrep
