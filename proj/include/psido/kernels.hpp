#pragma once

// Data-parallel sweeps used by the ring validator and the radical engine.
//
// Every kernel exists twice: a serial reference in `kernels::serial` and an
// OpenMP variant in `kernels::omp`. Both must produce identical results for
// any predicate that is a pure function of its arguments; the unit tests and
// the benchmark compare them directly.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "psido/element_set.hpp"

namespace psido {

enum class Exec { serial, parallel };

namespace kernels {

using Triple = std::array<Elem, 3>;
using Pair = std::array<Elem, 2>;

namespace serial {

/// Evaluates `pred` on every index in [0, n) and returns the indices for which
/// it holds, as a membership vector.
template <typename Pred>
std::vector<char> membership_sweep(std::size_t n, Pred&& pred)
{
    std::vector<char> hit(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        hit[i] = pred(static_cast<Elem>(i)) ? 1 : 0;
    return hit;
}

/// Lexicographically least (a, b, c) in [0, n)^3 for which `holds` is false.
template <typename Check>
std::optional<Triple> first_failing_triple(std::size_t n, Check&& holds)
{
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (!holds(static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)))
                    return Triple{static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c)};
    return std::nullopt;
}

/// Lexicographically least (a, b) in [0, n)^2 for which `holds` is false.
template <typename Check>
std::optional<Pair> first_failing_pair(std::size_t n, Check&& holds)
{
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (!holds(static_cast<Elem>(a), static_cast<Elem>(b)))
                return Pair{static_cast<Elem>(a), static_cast<Elem>(b)};
    return std::nullopt;
}

/// Applies `job(i)` for i in [0, n), storing results by index.
template <typename R, typename Job>
std::vector<R> map_indexed(std::size_t n, Job&& job)
{
    std::vector<R> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = job(i);
    return out;
}

} // namespace serial

namespace omp {

template <typename Pred>
std::vector<char> membership_sweep(std::size_t n, Pred&& pred)
{
    std::vector<char> hit(n, 0);
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i)
        hit[static_cast<std::size_t>(i)] = pred(static_cast<Elem>(i)) ? 1 : 0;
    return hit;
}

template <typename Check>
std::optional<Triple> first_failing_triple(std::size_t n, Check&& holds)
{
    // Each outer index records its own first failure; the merge keeps the
    // least, so the answer matches the serial scan.
    std::vector<std::optional<Triple>> per_row(n);
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t ai = 0; ai < count; ++ai) {
        const auto a = static_cast<Elem>(ai);
        for (std::size_t b = 0; b < n && !per_row[a]; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (!holds(a, static_cast<Elem>(b), static_cast<Elem>(c))) {
                    per_row[a] = Triple{a, static_cast<Elem>(b), static_cast<Elem>(c)};
                    break;
                }
    }
    for (auto& row : per_row)
        if (row)
            return row;
    return std::nullopt;
}

template <typename Check>
std::optional<Pair> first_failing_pair(std::size_t n, Check&& holds)
{
    std::vector<std::optional<Pair>> per_row(n);
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t ai = 0; ai < count; ++ai) {
        const auto a = static_cast<Elem>(ai);
        for (std::size_t b = 0; b < n; ++b)
            if (!holds(a, static_cast<Elem>(b))) {
                per_row[a] = Pair{a, static_cast<Elem>(b)};
                break;
            }
    }
    for (auto& row : per_row)
        if (row)
            return row;
    return std::nullopt;
}

template <typename R, typename Job>
std::vector<R> map_indexed(std::size_t n, Job&& job)
{
    std::vector<R> out(n);
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = job(static_cast<std::size_t>(i));
    return out;
}

} // namespace omp

template <typename Pred>
std::vector<char> membership_sweep(std::size_t n, Pred&& pred, Exec exec)
{
    return exec == Exec::parallel ? omp::membership_sweep(n, pred) : serial::membership_sweep(n, pred);
}

template <typename Check>
std::optional<Triple> first_failing_triple(std::size_t n, Check&& holds, Exec exec)
{
    return exec == Exec::parallel ? omp::first_failing_triple(n, holds)
                                  : serial::first_failing_triple(n, holds);
}

template <typename Check>
std::optional<Pair> first_failing_pair(std::size_t n, Check&& holds, Exec exec)
{
    return exec == Exec::parallel ? omp::first_failing_pair(n, holds)
                                  : serial::first_failing_pair(n, holds);
}

template <typename R, typename Job>
std::vector<R> map_indexed(std::size_t n, Job&& job, Exec exec)
{
    return exec == Exec::parallel ? omp::map_indexed<R>(n, job) : serial::map_indexed<R>(n, job);
}

} // namespace kernels
} // namespace psido
