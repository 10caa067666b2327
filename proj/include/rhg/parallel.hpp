#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace rhg {

// Runs body(0) .. body(n_tasks-1) on up to `workers` threads.  Task order is
// unspecified, so callers must write results into per-task slots; that keeps
// output identical for any worker count.  The first exception thrown by a
// task is rethrown on the calling thread.
template <typename F>
void parallel_for(std::size_t n_tasks, unsigned workers, F&& body) {
    if (n_tasks == 0) return;
    if (workers <= 1 || n_tasks == 1) {
        for (std::size_t i = 0; i < n_tasks; ++i) body(i);
        return;
    }
    const unsigned nthreads =
        static_cast<unsigned>(std::min<std::size_t>(workers, n_tasks));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n_tasks) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i) threads.emplace_back(run);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace rhg
