#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "arcfact/config.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Data-parallel inner loops of the toolkit. Each kernel has a serial
// reference implementation and an OpenMP variant that must produce identical
// results; run_* dispatches on the process settings. Tests and the benchmark
// target exercise both sides.
namespace arcfact::kernels {

inline bool parallel_enabled() {
#ifdef _OPENMP
    return settings().parallel;
#else
    return false;
#endif
}

// ---- existence scan (early exit allowed; result is a plain boolean) ----

template <class Pred>
bool any_serial(std::uint64_t n, Pred&& pred) {
    for (std::uint64_t i = 0; i < n; ++i)
        if (pred(i)) return true;
    return false;
}

template <class Pred>
bool any_parallel(std::uint64_t n, Pred&& pred) {
#ifdef _OPENMP
    std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        if (found.load(std::memory_order_relaxed)) continue;
        if (pred(static_cast<std::uint64_t>(i))) found.store(true, std::memory_order_relaxed);
    }
    return found.load();
#else
    return any_serial(n, pred);
#endif
}

template <class Pred>
bool run_any(std::uint64_t n, Pred&& pred) {
    return parallel_enabled() ? any_parallel(n, pred) : any_serial(n, pred);
}

// ---- collect all matching indices, ascending ----

template <class Pred>
std::vector<std::uint64_t> collect_serial(std::uint64_t n, Pred&& pred) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < n; ++i)
        if (pred(i)) out.push_back(i);
    return out;
}

template <class Pred>
std::vector<std::uint64_t> collect_parallel(std::uint64_t n, Pred&& pred) {
#ifdef _OPENMP
    std::vector<std::vector<std::uint64_t>> local;
#pragma omp parallel
    {
#pragma omp single
        local.resize(static_cast<std::size_t>(omp_get_num_threads()));
        auto& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
            if (pred(static_cast<std::uint64_t>(i))) mine.push_back(static_cast<std::uint64_t>(i));
    }
    // static schedule gives each thread an ascending contiguous block, so
    // concatenating by thread id then fixing overlaps with a sort keeps the
    // result identical to the serial scan
    std::vector<std::uint64_t> out;
    for (auto& v : local) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;
#else
    return collect_serial(n, pred);
#endif
}

template <class Pred>
std::vector<std::uint64_t> run_collect(std::uint64_t n, Pred&& pred) {
    return parallel_enabled() ? collect_parallel(n, pred) : collect_serial(n, pred);
}

// ---- count matches ----

template <class Pred>
std::uint64_t count_serial(std::uint64_t n, Pred&& pred) {
    std::uint64_t c = 0;
    for (std::uint64_t i = 0; i < n; ++i)
        if (pred(i)) ++c;
    return c;
}

template <class Pred>
std::uint64_t count_parallel(std::uint64_t n, Pred&& pred) {
#ifdef _OPENMP
    std::uint64_t c = 0;
#pragma omp parallel for schedule(static) reduction(+ : c)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
        if (pred(static_cast<std::uint64_t>(i))) ++c;
    return c;
#else
    return count_serial(n, pred);
#endif
}

template <class Pred>
std::uint64_t run_count(std::uint64_t n, Pred&& pred) {
    return parallel_enabled() ? count_parallel(n, pred) : count_serial(n, pred);
}

// ---- s-arc walk counting over an out-adjacency list ----
// walks[v] = number of s-walks starting at v; returns the total, throwing
// resource_limit_error when it would exceed `limit`.

std::uint64_t count_walks_serial(const std::vector<std::vector<std::uint32_t>>& out,
                                 unsigned s, std::uint64_t limit);
std::uint64_t count_walks_parallel(const std::vector<std::vector<std::uint32_t>>& out,
                                   unsigned s, std::uint64_t limit);
std::uint64_t run_count_walks(const std::vector<std::vector<std::uint32_t>>& out, unsigned s,
                              std::uint64_t limit);

}  // namespace arcfact::kernels
