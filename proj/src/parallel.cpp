#include "algcensus/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace algcensus {

static int g_threads = 0;

int thread_count() {
    // the environment variable wins over any programmatic setting
    if (const char* env = std::getenv("ALGCENSUS_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    if (g_threads > 0) return g_threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void set_thread_count(int t) { g_threads = t; }

void parallel_blocks(long long nblocks, const std::function<void(long long)>& fn) {
    const int t = thread_count();
    if (t <= 1 || nblocks <= 1) {
        for (long long b = 0; b < nblocks; ++b) fn(b);
        return;
    }
    std::atomic<long long> next{0};
    auto worker = [&] {
        for (;;) {
            long long b = next.fetch_add(1);
            if (b >= nblocks) return;
            fn(b);
        }
    };
    std::vector<std::thread> pool;
    int nw = static_cast<int>(std::min<long long>(t, nblocks));
    pool.reserve(nw);
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace algcensus
