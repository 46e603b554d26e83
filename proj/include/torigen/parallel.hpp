#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace torigen {

// Thread count used when a caller passes 0. Initialised from TORIGEN_THREADS.
int default_threads();
void set_default_threads(int n);

// Runs fn(i) for i in [0, n) on up to `threads` workers (0 = default).
// Results must be written to per-index slots; reduction is left to the caller
// so that it happens in index order.
template <class F>
void parallel_for(std::size_t n, int threads, F&& fn) {
    if (threads <= 0) threads = default_threads();
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace torigen
