#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ttlab {

/// Resolves a user thread count; 0 means one per hardware thread.
inline int resolve_threads(int requested)
{
    if (requested > 0)
        return requested;
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

/// Runs task(i) for i in [0, tasks) on up to `threads` workers pulling from a
/// shared counter. The first exception thrown by any task is rethrown here.
template <typename Task>
void parallel_for(std::size_t tasks, int threads, Task && task)
{
    int workers = std::min<int>(resolve_threads(threads), static_cast<int>(std::max<std::size_t>(tasks, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks; ++i)
            task(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < tasks; i = next++) {
                    try {
                        task(i);
                    }
                    catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (! failure)
                            failure = std::current_exception();
                        next = tasks;
                    }
                }
            });
    }
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace ttlab
