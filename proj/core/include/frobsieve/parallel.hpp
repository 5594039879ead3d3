#pragma once

// Minimal fork-join pool: a fixed number of workers pull work-unit indices
// from a shared atomic counter and write results into per-index slots, so
// the merged output is independent of scheduling and thread count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace frobsieve {

/// std::thread::hardware_concurrency(), never 0.
unsigned default_threads();

template <class Task>
auto parallel_map(std::size_t units, unsigned threads, Task&& task)
    -> std::vector<std::invoke_result_t<Task&, std::size_t>> {
    using Result = std::invoke_result_t<Task&, std::size_t>;
    std::vector<Result> results(units);
    if (units == 0) return results;

    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads == 0 ? 1 : threads, units));
    if (workers <= 1) {
        for (std::size_t i = 0; i < units; ++i) results[i] = task(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < units; i = next.fetch_add(1)) {
                    try {
                        results[i] = task(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        next.store(units);
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace frobsieve
