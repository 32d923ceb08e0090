#pragma once

// Internal strided worker pool for independent sweep elements. The first
// exception thrown by any worker is rethrown on the calling thread after
// join; results keep input order because workers write disjoint indices.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace beamvar::detail {

inline void parallel_strided(std::size_t count, int threads,
                             const std::function<void(std::size_t)>& body) {
    const int t =
        std::max(1, std::min<int>(threads, static_cast<int>(count)));
    if (t <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (int w = 0; w < t; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += t) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace beamvar::detail
