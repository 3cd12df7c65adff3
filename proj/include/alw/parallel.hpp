#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace alw {

// Default worker count: ALW_THREADS if set, else 1.
inline int default_threads() {
    if (const char* e = std::getenv("ALW_THREADS")) {
        try {
            int t = std::stoi(e);
            if (t > 0) return t;
        } catch (...) {
        }
    }
    return 1;
}

// Runs fn(i) for i in [0, n). If fn returns true, indices above i are no
// longer started; the smallest such i is returned (n if none). Work already
// in flight above the cutoff still finishes; callers must ignore it, which
// keeps results independent of scheduling.
template <class F>
std::size_t parallel_first(std::size_t n, int threads, F&& fn) {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> cut{n};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n || i > cut.load()) return;
            if (fn(i)) {
                std::size_t c = cut.load();
                while (i < c && !cut.compare_exchange_weak(c, i)) {
                }
            }
        }
    };
    threads = std::max(1, std::min<int>(threads, int(n)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return cut.load();
}

template <class F>
void parallel_for(std::size_t n, int threads, F&& fn) {
    parallel_first(n, threads, [&](std::size_t i) {
        fn(i);
        return false;
    });
}

}  // namespace alw
