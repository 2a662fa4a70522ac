#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace bsplan {

inline int effective_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Static block partition of [0, n); fn(i) must only write state owned by
// index i, which keeps results independent of the worker count.
inline void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    threads = std::min(effective_threads(threads), n);
    if (threads <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    const int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const int lo = t * chunk;
        const int hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (int i = lo; i < hi; ++i) fn(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

} // namespace bsplan
