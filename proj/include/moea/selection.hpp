#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "core.hpp"
#include "crowding.hpp"
#include "random.hpp"
#include "ranking.hpp"

namespace moea {

enum class SelectionScheme {
    EachParentOnce,
    UniformRandom,
    IndependentTournaments,
    TwoPermutationTournaments,
};

inline const char* to_string(SelectionScheme scheme) {
    switch (scheme) {
        case SelectionScheme::EachParentOnce: return "each_parent_once";
        case SelectionScheme::UniformRandom: return "uniform";
        case SelectionScheme::IndependentTournaments: return "independent_tournaments";
        case SelectionScheme::TwoPermutationTournaments: return "two_permutation_tournaments";
    }
    throw std::invalid_argument("to_string: unknown SelectionScheme");
}

// A population with its objectives, front partition, and crowding distances.
// Distances are computed within each front separately, so they are comparable
// only between individuals of equal rank, which is exactly how they are used.
struct ScoredPopulation {
    std::vector<Bitstring> individuals;
    std::vector<ObjectiveVector> objectives;
    FrontPartition partition;
    std::vector<CrowdingDistance> distances;

    std::size_t size() const { return individuals.size(); }
};

// Sort into fronts and compute crowding per front (front 1 first, then front
// 2, ...; this order pins the RNG stream used for tie shuffles).
inline ScoredPopulation score_population(std::vector<Bitstring> individuals,
                                         std::vector<ObjectiveVector> objectives,
                                         RandomSource& rng,
                                         TieOrder tie_order = TieOrder::Randomized) {
    if (individuals.size() != objectives.size())
        throw std::invalid_argument("score_population: individuals/objectives size mismatch");
    if (individuals.empty())
        throw std::invalid_argument("score_population: empty population");

    ScoredPopulation scored;
    scored.individuals = std::move(individuals);
    scored.objectives = std::move(objectives);
    scored.partition = fast_nondominated_sort(scored.objectives);
    scored.distances.assign(scored.objectives.size(), CrowdingDistance::finite(Rational()));

    std::vector<ObjectiveVector> front_values;
    for (const std::vector<std::size_t>& front : scored.partition.fronts) {
        front_values.clear();
        for (std::size_t i : front)
            front_values.push_back(scored.objectives[i]);
        const std::vector<CrowdingDistance> d = crowding_distances(front_values, rng, tie_order);
        for (std::size_t k = 0; k < front.size(); ++k)
            scored.distances[front[k]] = d[k];
    }
    return scored;
}

enum class Ordering { FirstBetter, SecondBetter, Tie };

// Total preorder used by tournaments: lower rank wins; at equal rank the
// larger crowding distance wins; otherwise a tie.
inline Ordering total_order_better(std::size_t i, std::size_t j, const ScoredPopulation& pop) {
    if (i >= pop.size() || j >= pop.size())
        throw std::invalid_argument("total_order_better: index out of range");
    const std::size_t rank_i = pop.partition.rank_of[i];
    const std::size_t rank_j = pop.partition.rank_of[j];
    if (rank_i != rank_j)
        return rank_i < rank_j ? Ordering::FirstBetter : Ordering::SecondBetter;
    const auto cmp = pop.distances[i] <=> pop.distances[j];
    if (cmp > 0) return Ordering::FirstBetter;
    if (cmp < 0) return Ordering::SecondBetter;
    return Ordering::Tie;
}

namespace detail {

// One binary tournament; ties are settled by a single fair coin, heads (true)
// keeping the first contestant.
inline std::size_t tournament_winner(std::size_t a, std::size_t b, const ScoredPopulation& pop,
                                     RandomSource& rng) {
    switch (total_order_better(a, b, pop)) {
        case Ordering::FirstBetter: return a;
        case Ordering::SecondBetter: return b;
        case Ordering::Tie: return rng.coin() ? a : b;
    }
    throw std::logic_error("tournament_winner: unreachable");
}

}  // namespace detail

// N parent indices for N offspring, one of four schemes:
//  - EachParentOnce: every individual exactly once, in index order.
//  - UniformRandom: N independent uniform draws with replacement.
//  - IndependentTournaments: N tournaments, each between two distinct
//    uniformly drawn individuals.
//  - TwoPermutationTournaments: two fresh uniform permutations, one
//    tournament per adjacent pair of each; all winners of the first
//    permutation are emitted before all winners of the second.  With an odd
//    population each permutation pairs off all but its last element, and the
//    two leftover elements contest one extra tournament (emitted last) for
//    the final slot, so every individual still enters at most two
//    tournaments and a unique best individual is still always selected.
inline std::vector<std::size_t> select_parents(SelectionScheme scheme,
                                               const ScoredPopulation& pop, RandomSource& rng) {
    const std::size_t n = pop.size();
    if (n == 0)
        throw std::invalid_argument("select_parents: empty population");
    std::vector<std::size_t> parents;
    parents.reserve(n);

    switch (scheme) {
        case SelectionScheme::EachParentOnce:
            for (std::size_t i = 0; i < n; ++i)
                parents.push_back(i);
            return parents;

        case SelectionScheme::UniformRandom:
            for (std::size_t i = 0; i < n; ++i)
                parents.push_back(static_cast<std::size_t>(rng.uniform_index(n)));
            return parents;

        case SelectionScheme::IndependentTournaments: {
            if (n < 2)
                throw std::invalid_argument("select_parents: tournaments need at least two individuals");
            for (std::size_t i = 0; i < n; ++i) {
                const auto [a, b] = rng.distinct_pair(n);
                parents.push_back(detail::tournament_winner(a, b, pop, rng));
            }
            return parents;
        }

        case SelectionScheme::TwoPermutationTournaments: {
            if (n < 2)
                throw std::invalid_argument(
                    "select_parents: two-permutation tournaments need at least two individuals");
            std::size_t spare[2] = {0, 0};
            for (int round = 0; round < 2; ++round) {
                const std::vector<std::size_t> perm = rng.permutation(n);
                for (std::size_t p = 0; p + 1 < n; p += 2)
                    parents.push_back(detail::tournament_winner(perm[p], perm[p + 1], pop, rng));
                if (n % 2 != 0)
                    spare[round] = perm[n - 1];
            }
            if (n % 2 != 0)
                parents.push_back(detail::tournament_winner(spare[0], spare[1], pop, rng));
            return parents;
        }
    }
    throw std::invalid_argument("select_parents: unknown SelectionScheme");
}

// Survivor selection over a combined population: whole fronts are kept while
// they fit; the front that straddles the cut is shuffled uniformly and then
// stably sorted by descending crowding distance, so individuals tied at the
// threshold are kept uniformly at random while everyone strictly above it is
// always kept.  Returns ascending indices into `combined`.
inline std::vector<std::size_t> survival_select(const ScoredPopulation& combined,
                                                std::size_t n_survivors, RandomSource& rng) {
    const std::size_t m = combined.size();
    if (n_survivors == 0)
        throw std::invalid_argument("survival_select: need at least one survivor");
    if (n_survivors > m)
        throw std::invalid_argument("survival_select: fewer individuals than survivors");

    std::vector<std::size_t> kept;
    kept.reserve(n_survivors);
    for (const std::vector<std::size_t>& front : combined.partition.fronts) {
        if (kept.size() == n_survivors)
            break;
        if (kept.size() + front.size() <= n_survivors) {
            kept.insert(kept.end(), front.begin(), front.end());
            continue;
        }
        const std::size_t need = n_survivors - kept.size();
        std::vector<std::size_t> order = rng.permutation(front.size());
        std::vector<std::size_t> shuffled(front.size());
        for (std::size_t t = 0; t < front.size(); ++t)
            shuffled[t] = front[order[t]];
        std::stable_sort(shuffled.begin(), shuffled.end(), [&](std::size_t a, std::size_t b) {
            return combined.distances[b] < combined.distances[a];
        });
        kept.insert(kept.end(), shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(need));
        break;
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

}  // namespace moea
