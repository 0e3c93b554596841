#ifndef CORPUSCOPE_PARALLEL_HPP
#define CORPUSCOPE_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace corpuscope {

// Worker cap: CORPUSCOPE_THREADS if set (minimum 1), hardware concurrency
// otherwise.
inline std::size_t worker_thread_cap() {
    if (const char* env = std::getenv("CORPUSCOPE_THREADS")) {
        const long value = std::strtol(env, nullptr, 10);
        if (value >= 1) return static_cast<std::size_t>(value);
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(0..n-1) across worker threads. Results must be written to
// index-addressed slots so output does not depend on scheduling.
template <typename Fn>
void parallel_for_index(std::size_t n, Fn&& fn) {
    const std::size_t workers = std::min(worker_thread_cap(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) break;
                try {
                    fn(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                }
            }
        });
    }
    for (std::thread& thread : threads) thread.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace corpuscope

#endif
