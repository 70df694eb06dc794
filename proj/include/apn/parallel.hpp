#pragma once

// Tiny deterministic work-sharing loop.  Workers pull indices from an atomic
// counter and write into caller-owned slots, so results are identical for any
// thread count; only wall time changes.

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace apn::par {

inline void parallel_for(std::uint64_t count, unsigned jobs,
                         const std::function<void(std::uint64_t)>& body) {
    if (jobs == 0) throw std::invalid_argument("jobs must be positive");
    if (count == 0) return;
    if (jobs == 1) {
        for (std::uint64_t i = 0; i < count; ++i) body(i);
        return;
    }

    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                body(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    const unsigned spawn = static_cast<unsigned>(
        std::min<std::uint64_t>(jobs, count));
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace apn::par
