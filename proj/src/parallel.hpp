// Deterministic range partitioning.  Workers process disjoint contiguous
// chunks and results are merged in chunk order, so the output never depends
// on the degree of parallelism.  FQBOUND_THREADS caps the worker count.

#ifndef FQ_PARALLEL_HPP
#define FQ_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace fq {

inline int effective_threads(int requested) {
    int n = requested;
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (const char* cap = std::getenv("FQBOUND_THREADS")) {
        const int c = std::atoi(cap);
        if (c >= 1) n = std::min(n, c);
    }
    return std::max(1, n);
}

// fn(worker_index, lo, hi) over [0, n) split into contiguous chunks.
template <class Fn>
void parallel_chunks(long long n, int threads, Fn&& fn) {
    threads = effective_threads(threads);
    if (n <= 0) return;
    const int workers = static_cast<int>(std::min<long long>(threads, n));
    if (workers == 1) {
        fn(0, 0LL, n);
        return;
    }
    std::vector<std::thread> pool;
    const long long chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long long lo = w * chunk;
        const long long hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, w, lo, hi] { fn(w, lo, hi); });
    }
    for (auto& t : pool) t.join();
}

} // namespace fq

#endif
