#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace skewmat {

// Worker count: SKEWMAT_THREADS when set (clamped to [1, 64]), else the
// hardware concurrency, else 1.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("SKEWMAT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v < 1) v = 1;
        if (v > 64) v = 64;
        return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : (hw > 64 ? 64 : hw);
}

// Runs body(t) for t in [0, count) across the thread budget. The first
// exception thrown by any body is rethrown after all workers join; callers
// must make body(t) write only to slot t of any shared output so results are
// ordered by input index, not completion order.
template <typename Body>
void parallel_for(std::size_t count, const Body& body) {
    unsigned workers = thread_budget();
    if (count == 0) return;
    if (workers <= 1 || count == 1) {
        for (std::size_t t = 0; t < count; ++t) body(t);
        return;
    }
    if (workers > count) workers = static_cast<unsigned>(count);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (;;) {
                std::size_t t = next.fetch_add(1);
                if (t >= count) return;
                try {
                    body(t);
                } catch (...) {
                    errors[w] = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace skewmat
