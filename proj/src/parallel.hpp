#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace aplcm {

inline unsigned effective_workers(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, count) over contiguous chunks on `workers`
/// threads (0 = hardware default). Callers write into pre-sized slots
/// keyed by i, so results are identical for every worker count. If
/// several chunks throw, the exception from the lowest chunk wins.
template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& fn) {
    workers = effective_workers(workers);
    if (count == 0) return;
    if (workers <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t nthreads = std::min<std::size_t>(workers, count);
    const std::size_t chunk = (count + nthreads - 1) / nthreads;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, &errors, t, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace aplcm
