#include "rebalance/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace rebalance {

size_t thread_count() {
    if (const char* env = std::getenv("REBALANCE_THREADS")) {
        const long v = std::atol(env);
        if (v >= 1) return static_cast<size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn) {
    const size_t workers = thread_count();
    if (workers <= 1 || n < 2048) {
        fn(0, n);
        return;
    }
    const size_t chunks = std::min(workers, n);
    const size_t step = (n + chunks - 1) / chunks;
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (size_t c = 0; c < chunks; ++c) {
        const size_t begin = c * step;
        const size_t end = std::min(n, begin + step);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace rebalance
