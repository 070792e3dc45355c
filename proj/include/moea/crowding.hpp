#pragma once

#include <algorithm>
#include <compare>
#include <span>
#include <stdexcept>
#include <vector>

#include "core.hpp"
#include "random.hpp"
#include "rational.hpp"

namespace moea {

// Crowding distance of one individual within its front: either infinite (a
// boundary individual in some objective's sorted order) or an exact rational
// sum of normalized neighbor gaps.  Infinity compares above every finite
// value and absorbs additions.
class CrowdingDistance {
public:
    static CrowdingDistance infinite() {
        CrowdingDistance d;
        d.infinite_ = true;
        return d;
    }

    static CrowdingDistance finite(Rational value) {
        CrowdingDistance d;
        d.value_ = value;
        return d;
    }

    bool is_infinite() const { return infinite_; }

    const Rational& value() const {
        if (infinite_)
            throw std::logic_error("CrowdingDistance: no finite value, distance is infinite");
        return value_;
    }

    friend bool operator==(const CrowdingDistance& a, const CrowdingDistance& b) {
        if (a.infinite_ || b.infinite_)
            return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }

    friend std::strong_ordering operator<=>(const CrowdingDistance& a,
                                            const CrowdingDistance& b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

private:
    bool infinite_ = false;
    Rational value_;
};

// How individuals with equal objective value are ordered in the per-objective
// sorted lists.  Randomized is the reference behavior; IndexStable (ties stay
// in the order the front was given) exists for tests and debugging.
enum class TieOrder { Randomized, IndexStable };

namespace detail {

// Sorted index order for one objective.  Ties are grouped by a stable sort;
// under Randomized every tied group of two or more is then rearranged by a
// fresh uniform permutation (groups are visited in ascending key order, f1
// before f2 across calls, which pins the RNG stream).
template <typename Key>
std::vector<std::size_t> objective_order(std::span<const ObjectiveVector> front, Key key,
                                         RandomSource& rng, TieOrder tie_order) {
    std::vector<std::size_t> order(front.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return key(front[a]) < key(front[b]); });
    if (tie_order == TieOrder::Randomized) {
        std::size_t lo = 0;
        while (lo < order.size()) {
            std::size_t hi = lo + 1;
            while (hi < order.size() && key(front[order[hi]]) == key(front[order[lo]]))
                ++hi;
            if (hi - lo >= 2) {
                const std::vector<std::size_t> block(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                                     order.begin() + static_cast<std::ptrdiff_t>(hi));
                const std::vector<std::size_t> perm = rng.permutation(hi - lo);
                for (std::size_t t = 0; t < block.size(); ++t)
                    order[lo + t] = block[perm[t]];
            }
            lo = hi;
        }
    }
    return order;
}

}  // namespace detail

// Crowding distances for one front.  Per objective, the first and last of the
// sorted order become infinite; each interior individual accumulates
// (value of next - value of previous) / (value of last - value of first),
// exactly.  A zero-range objective contributes nothing to interior
// individuals.  Fronts of size one or two are therefore all-infinite.
inline std::vector<CrowdingDistance> crowding_distances(std::span<const ObjectiveVector> front,
                                                        RandomSource& rng,
                                                        TieOrder tie_order = TieOrder::Randomized) {
    const std::size_t m = front.size();
    if (m == 0)
        throw std::invalid_argument("crowding_distances: empty front");

    std::vector<char> is_infinite(m, 0);
    std::vector<Rational> sum(m);

    const auto accumulate = [&](auto key) {
        const std::vector<std::size_t> order =
            detail::objective_order(front, key, rng, tie_order);
        is_infinite[order.front()] = 1;
        is_infinite[order.back()] = 1;
        const int range = key(front[order.back()]) - key(front[order.front()]);
        if (range > 0) {
            for (std::size_t pos = 1; pos + 1 < m; ++pos) {
                const int gap = key(front[order[pos + 1]]) - key(front[order[pos - 1]]);
                sum[order[pos]] += Rational(gap, range);
            }
        }
    };
    accumulate([](const ObjectiveVector& v) { return v.f1; });
    accumulate([](const ObjectiveVector& v) { return v.f2; });

    std::vector<CrowdingDistance> distances;
    distances.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        distances.push_back(is_infinite[i] ? CrowdingDistance::infinite()
                                           : CrowdingDistance::finite(sum[i]));
    return distances;
}

}  // namespace moea
