#include "arcfact/kernels.hpp"

#include <algorithm>
#include <limits>

namespace arcfact::kernels {

namespace {

// One DP level: next[v] = sum of cur over out-neighbors of v. Saturates
// against `limit` so the caller can bail out before overflow.
bool walk_level(const std::vector<std::vector<std::uint32_t>>& out,
                const std::vector<std::uint64_t>& cur, std::vector<std::uint64_t>& next,
                std::uint64_t limit, bool parallel) {
    const std::int64_t n = static_cast<std::int64_t>(out.size());
    std::atomic<bool> over{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (std::int64_t v = 0; v < n; ++v) {
        std::uint64_t acc = 0;
        for (std::uint32_t w : out[static_cast<std::size_t>(v)]) {
            acc += cur[w];
            if (acc > limit) {
                over.store(true, std::memory_order_relaxed);
                acc = limit + 1;
                break;
            }
        }
        next[static_cast<std::size_t>(v)] = acc;
    }
    return !over.load();
}

std::uint64_t count_walks_impl(const std::vector<std::vector<std::uint32_t>>& out, unsigned s,
                               std::uint64_t limit, bool parallel) {
    std::vector<std::uint64_t> cur(out.size(), 1), next(out.size(), 0);
    for (unsigned level = 0; level < s; ++level) {
        if (!walk_level(out, cur, next, limit, parallel))
            throw resource_limit_error("arcs", limit, "s-arc count exceeds the enumeration bound");
        cur.swap(next);
    }
    std::uint64_t total = 0;
    for (std::uint64_t c : cur) {
        total += c;
        if (total > limit)
            throw resource_limit_error("arcs", limit, "s-arc count exceeds the enumeration bound");
    }
    return total;
}

}  // namespace

std::uint64_t count_walks_serial(const std::vector<std::vector<std::uint32_t>>& out, unsigned s,
                                 std::uint64_t limit) {
    return count_walks_impl(out, s, limit, false);
}

std::uint64_t count_walks_parallel(const std::vector<std::vector<std::uint32_t>>& out, unsigned s,
                                   std::uint64_t limit) {
    return count_walks_impl(out, s, limit, true);
}

std::uint64_t run_count_walks(const std::vector<std::vector<std::uint32_t>>& out, unsigned s,
                              std::uint64_t limit) {
    return parallel_enabled() ? count_walks_parallel(out, s, limit)
                              : count_walks_serial(out, s, limit);
}

}  // namespace arcfact::kernels
