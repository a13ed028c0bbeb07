#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace loopmod {

// Run fn(0..count-1) on up to `jobs` threads (0 = hardware concurrency).
// Results must be written to pre-sized slots so assembly order is fixed.
inline void parallel_for_index(size_t count, unsigned jobs, const std::function<void(size_t)>& fn) {
    if (jobs == 0) jobs = std::thread::hardware_concurrency();
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned threads = static_cast<unsigned>(std::min<size_t>(jobs, count));
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace loopmod
