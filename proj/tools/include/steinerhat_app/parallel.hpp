#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace steinerhat::app {

/// Evaluates f(0..n-1) on worker threads and returns the results in index order.
/// The first exception by index is rethrown after all workers finish.
template <typename F>
auto parallel_map(std::size_t n, F&& f, unsigned workers = std::thread::hardware_concurrency())
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<R> out(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t count = std::min<std::size_t>(std::max(1u, workers), n);
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (std::size_t k = 1; k < count; ++k) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

}  // namespace steinerhat::app
