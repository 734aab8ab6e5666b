#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tim::detail {

/// Splits [0, items) into fixed-size blocks and evaluates fn(begin, end) for
/// each on up to `workers` threads. Results come back indexed by block, so
/// any reduction over them in index order is independent of the worker count.
template <class Result, class Fn>
std::vector<Result> run_blocks(std::uint64_t items, std::uint64_t block, unsigned workers, Fn&& fn) {
    const std::uint64_t n_blocks = block == 0 ? 0 : (items + block - 1) / block;
    std::vector<Result> out(n_blocks);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            try {
                out[b] = fn(b * block, std::min(items, (b + 1) * block));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(n_blocks);
                return;
            }
        }
    };

    const auto threads = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(n_blocks, 1)));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace tim::detail
