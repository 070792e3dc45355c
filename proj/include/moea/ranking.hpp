#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "core.hpp"

namespace moea {

// Partition of a population into fronts by non-dominated sorting.
// fronts[0] holds the indices of the non-dominated individuals, fronts[1]
// those dominated only by fronts[0], and so on; every front is sorted by
// ascending index.  rank_of[i] is 1-based: i is in fronts[rank_of[i] - 1].
struct FrontPartition {
    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> rank_of;
};

// Fast non-dominated sort over objective values.  Counts, for each
// individual, how many others strictly dominate it and which ones it strictly
// dominates, then peels fronts off in rank order.  O(|values|^2) dominance
// tests; duplicates of the same value always land in the same front.
inline FrontPartition fast_nondominated_sort(std::span<const ObjectiveVector> values) {
    const std::size_t m = values.size();
    if (m == 0)
        throw std::invalid_argument("fast_nondominated_sort: empty population");

    std::vector<int> dominator_count(m, 0);
    std::vector<std::vector<std::size_t>> dominated(m);

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i != j && strictly_dominates(values[j], values[i])) {
                ++dominator_count[i];
                dominated[j].push_back(i);
            }
        }
    }

    FrontPartition partition;
    partition.rank_of.assign(m, 0);

    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < m; ++i)
        if (dominator_count[i] == 0)
            current.push_back(i);

    while (!current.empty()) {
        const std::size_t rank = partition.fronts.size() + 1;
        for (std::size_t i : current)
            partition.rank_of[i] = rank;

        std::vector<std::size_t> next;
        for (std::size_t i : current)
            for (std::size_t j : dominated[i])
                if (--dominator_count[j] == 0)
                    next.push_back(j);
        std::sort(next.begin(), next.end());

        partition.fronts.push_back(std::move(current));
        current = std::move(next);
    }

    return partition;
}

}  // namespace moea
