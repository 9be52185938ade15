#ifndef NIBBLE_PARALLEL_HPP
#define NIBBLE_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace nibble {

// Chunked parallel loop. Results must land in per-index slots; the round
// logic only uses this for pure per-vertex or per-color work driven by
// counter-based random streams, so the outcome does not depend on the
// schedule.
template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, std::size_t threads, Fn&& fn) {
    if (end <= begin) return;
    const std::size_t total = end - begin;
    if (threads <= 1 || total < 2) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min(threads, total);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = begin + w * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, w, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace nibble

#endif
