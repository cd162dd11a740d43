#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace netchrono {

/// Worker count: NETCHRONO_JOBS if set to a positive integer, otherwise the
/// number of hardware threads.
inline std::size_t default_jobs() {
    if (const char *env = std::getenv("NETCHRONO_JOBS")) {
        try {
            const long value = std::stol(env);
            if (value > 0)
                return static_cast<std::size_t>(value);
        } catch (const std::exception &) {
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [0, count) on up to `jobs` threads (0 = default_jobs()).
/// Indices are claimed dynamically; callers write results into slot i so output
/// never depends on scheduling. The exception from the lowest failing index is
/// rethrown after all workers finish.
template <typename Body>
void parallel_for(std::size_t count, std::size_t jobs, Body &&body) {
    if (jobs == 0)
        jobs = default_jobs();
    jobs = std::min(jobs, count);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (std::size_t t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
    }
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace netchrono
