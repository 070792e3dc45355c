#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "benchmarks.hpp"
#include "core.hpp"
#include "engines.hpp"
#include "rational.hpp"

namespace moea {

namespace detail {

inline std::vector<char> covered_mask(std::span<const ObjectiveVector> objectives,
                                      const ParetoFront& front) {
    std::vector<char> covered(front.size(), 0);
    for (const ObjectiveVector& v : objectives)
        if (front.contains(v))
            covered[static_cast<std::size_t>(v.f1)] = 1;
    return covered;
}

}  // namespace detail

// Fraction of the front's values present among `objectives`, exactly.
// Duplicates and order do not matter; an empty population covers nothing.
inline Rational coverage_ratio(std::span<const ObjectiveVector> objectives,
                               const ParetoFront& front) {
    const std::vector<char> covered = detail::covered_mask(objectives, front);
    std::int64_t count = 0;
    for (char c : covered)
        count += c;
    return Rational(count, static_cast<std::int64_t>(front.size()));
}

// Length of the longest run of consecutive uncovered front values (indexed by
// f1 = 0..n, no wraparound).  Zero iff the front is fully covered.
inline int max_uncovered_gap(std::span<const ObjectiveVector> objectives,
                             const ParetoFront& front) {
    const std::vector<char> covered = detail::covered_mask(objectives, front);
    int best = 0;
    int run = 0;
    for (char c : covered) {
        run = c ? 0 : run + 1;
        if (run > best)
            best = run;
    }
    return best;
}

// First generation whose population held both extreme values (0, n) and
// (n, 0) simultaneously; empty if that never happened within the trace.
inline std::optional<std::uint64_t> first_generation_both_extremes(const RunTrace& trace) {
    for (const TraceRecord& record : trace.records)
        if (record.has_extreme_0n && record.has_extreme_n0)
            return record.generation;
    return std::nullopt;
}

}  // namespace moea
