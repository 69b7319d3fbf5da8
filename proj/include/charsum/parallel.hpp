#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace charsum {

// Worker count: CHARSUM_THREADS if set, else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("CHARSUM_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Sum of term(i) for i in [0, n), partitioned into contiguous index ranges.
// Partial sums are exact signed integers, so the result does not depend on
// the partitioning.
template <class Term>
std::int64_t parallel_sum(std::uint64_t n, Term term) {
    const unsigned workers = worker_count();
    if (workers <= 1 || n < (std::uint64_t{1} << 16)) {
        std::int64_t acc = 0;
        for (std::uint64_t i = 0; i < n; ++i) acc += term(i);
        return acc;
    }
    std::vector<std::int64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = lo + chunk < n ? lo + chunk : n;
        pool.emplace_back([&, lo, hi, w] {
            std::int64_t acc = 0;
            for (std::uint64_t i = lo; i < hi; ++i) acc += term(i);
            partial[w] = acc;
        });
    }
    for (auto& t : pool) t.join();
    std::int64_t total = 0;
    for (std::int64_t p : partial) total += p;
    return total;
}

} // namespace charsum
