#pragma once

#include <exception>
#include <mutex>
#include <utility>
#include <vector>

#include <jacquet/formal_sum.hpp>

namespace jacquet
{

// Execution policy of the expansion kernels. The serial path is the
// reference; the parallel path must produce identical sums.
enum class Exec { serial, parallel };

namespace detail
{

// Flattened view of a sum, for indexed loops.
template <typename Term>
std::vector<std::pair<const Term *, const Multiplicity *>> flatten(const FormalSum<Term> &s)
{
    std::vector<std::pair<const Term *, const Multiplicity *>> out;
    out.reserve(s.size());
    for (const auto &[t, m] : s) {
        out.emplace_back(&t, &m);
    }
    return out;
}

// Runs body(i, acc) for i in [0, n), accumulating into per-thread sums that
// are merged at the end. Addition is exact and commutative, so the merged
// result does not depend on the schedule.
template <typename Out, typename Body>
FormalSum<Out> expand(std::size_t n, Body &&body, Exec exec)
{
    FormalSum<Out> result;
    if (exec == Exec::serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i, result);
        }
        return result;
    }

    std::exception_ptr error;
    std::mutex merge_mutex;
#pragma omp parallel
    {
        FormalSum<Out> local;
#pragma omp for schedule(dynamic, 4)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i), local);
            } catch (...) {
                std::lock_guard lock(merge_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
        std::lock_guard lock(merge_mutex);
        if (!error) {
            try {
                result += std::move(local);
            } catch (...) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return result;
}

} // namespace detail

} // namespace jacquet
