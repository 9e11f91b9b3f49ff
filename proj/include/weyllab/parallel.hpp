#pragma once
// Deterministic worker pool.  Work is split into fixed chunks claimed off an
// atomic counter; every chunk writes only its own slot and the slots are
// combined in index order afterwards.  The result is therefore bit-identical
// for any worker count, which the scan and quadrature paths rely on.

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace weyllab {

inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Applies fn(i) for i in [0, count) and returns the results in order.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn fn, int workers,
                            std::size_t chunk = 64) {
    std::vector<T> out(count);
    workers = resolve_workers(workers);
    if (workers <= 1 || count <= chunk) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::size_t nchunks = (count + chunk - 1) / chunk;
    std::atomic<std::size_t> next{0};
    auto body = [&]() {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= nchunks) break;
            std::size_t lo = c * chunk;
            std::size_t hi = std::min(count, lo + chunk);
            for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    return out;
}

// Chunked reduction: map each chunk [lo,hi) to a partial with chunk_fn, then
// combine partials strictly in chunk order (combine need not be associative
// with rounding; order is what makes the result reproducible).
template <typename P, typename ChunkFn, typename CombineFn>
P parallel_reduce(std::size_t count, std::size_t chunk, ChunkFn chunk_fn,
                  P init, CombineFn combine, int workers) {
    std::size_t nchunks = (count + chunk - 1) / chunk;
    std::vector<P> partials(nchunks);
    workers = resolve_workers(workers);
    if (workers <= 1 || nchunks <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c)
            partials[c] = chunk_fn(c * chunk, std::min(count, (c + 1) * chunk));
    } else {
        std::atomic<std::size_t> next{0};
        auto body = [&]() {
            for (;;) {
                std::size_t c = next.fetch_add(1);
                if (c >= nchunks) break;
                partials[c] =
                    chunk_fn(c * chunk, std::min(count, (c + 1) * chunk));
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(body);
        for (auto& t : pool) t.join();
    }
    P acc = init;
    for (std::size_t c = 0; c < nchunks; ++c) acc = combine(acc, partials[c]);
    return acc;
}

}  // namespace weyllab
