// Acceptance suite: end-to-end checks of the library's central promises,
// from exact combinatorial laws to statistical runtime behaviour of whole
// algorithm runs.  Each criterion prints exactly one line:
//
//   [k] PASS <what>            or
//   [k] FAIL <what>: <reason>
//
// Usage: acceptance [k]   (k in 1..11; without an argument all criteria run
// in order).  The process exits nonzero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <moea/moea.hpp>

#include "../support/oracles.hpp"

namespace {

using moea::Bitstring;
using moea::CrowdingDistance;
using moea::EngineConfig;
using moea::MutationOp;
using moea::ObjectiveVector;
using moea::ParetoFront;
using moea::Problem;
using moea::ProblemKind;
using moea::Rational;
using moea::RunTrace;
using moea::SelectionScheme;
using moea::Termination;
using moea::TieOrder;
using moea::TraceRecord;

constexpr double kE = std::numbers::e;

// Constant of the expected-runtime guarantee shared by the fair and the
// uniform parent-selection schemes.
double easy_constant() { return 2.0 * kE * kE / (kE - 1.0); }

const SelectionScheme kAllSchemes[] = {
    SelectionScheme::EachParentOnce,
    SelectionScheme::UniformRandom,
    SelectionScheme::IndependentTournaments,
    SelectionScheme::TwoPermutationTournaments,
};
const SelectionScheme kEasySchemes[] = {
    SelectionScheme::EachParentOnce,
    SelectionScheme::UniformRandom,
};
const SelectionScheme kTournamentSchemes[] = {
    SelectionScheme::IndependentTournaments,
    SelectionScheme::TwoPermutationTournaments,
};
const MutationOp kMutations[] = {MutationOp::OneBit, MutationOp::Bitwise};

RunTrace run_nsga2(ProblemKind kind, int n, std::size_t pop, SelectionScheme scheme,
                   MutationOp op, std::uint64_t budget, std::uint64_t seed) {
    EngineConfig config;
    config.problem = {kind, n};
    config.population_size = pop;
    config.scheme = scheme;
    config.mutation = op;
    config.max_generations = budget;
    config.seed = seed;
    return moea::nsga2_run(config);
}

double median_of(std::vector<double> values) { return moea::aggregate(std::move(values)).median; }

std::string cell_name(SelectionScheme scheme, MutationOp op) {
    return std::string(moea::to_string(scheme)) + "+" + moea::to_string(op);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// ---------------------------------------------------------------------------
// 1. The fast front partition must agree exactly with one recomputed from the
//    recursive definition, on random populations of both benchmarks.
bool sorting_matches_oracle(std::string& why) {
    moea::RandomSource rng(90101);
    for (int rep = 0; rep < 1000; ++rep) {
        const ProblemKind kind =
            rep % 2 == 0 ? ProblemKind::OneMinMax : ProblemKind::LeadingOnesTrailingZeroes;
        const int n = 1 + static_cast<int>(rng.uniform_index(10));
        const std::size_t size = 1 + static_cast<std::size_t>(rng.uniform_index(64));
        const Problem problem{kind, n};
        std::vector<ObjectiveVector> values;
        values.reserve(size);
        for (std::size_t i = 0; i < size; ++i)
            values.push_back(
                moea::evaluate(problem, Bitstring::uniform(static_cast<std::size_t>(n), rng)));
        const moea::FrontPartition fast = moea::fast_nondominated_sort(values);
        const moea::FrontPartition naive = oracle::naive_front_partition(values);
        if (fast.fronts != naive.fronts || fast.rank_of != naive.rank_of) {
            why = "partition mismatch on population " + std::to_string(rep);
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 2. Crowding distances must equal the definitional recomputation exactly, at
//    most four members of any one objective value may carry positive
//    distance, and on line-shaped fronts the 2/range threshold laws must hold
//    under twenty different tie shuffles: a value missing a neighbour always
//    keeps a member at or above the threshold, a doubly-neighboured value at
//    most two such members.
bool crowding_laws_hold(std::string& why) {
    moea::RandomSource rng(90201);

    for (int rep = 0; rep < 1000; ++rep) {
        const int n = 2 + static_cast<int>(rng.uniform_index(30));
        const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform_index(40));
        const std::vector<ObjectiveVector> front =
            rep % 2 == 0 ? oracle::random_line_front(n, m, rng)
                         : oracle::random_lotz_first_front(n, m, rng);
        const std::vector<CrowdingDistance> got =
            moea::crowding_distances(front, rng, TieOrder::IndexStable);
        const std::vector<std::pair<bool, Rational>> want = oracle::naive_crowding(front);
        for (std::size_t i = 0; i < front.size(); ++i) {
            if (got[i].is_infinite() != want[i].first ||
                (!want[i].first && got[i].value() != want[i].second)) {
                why = "distance mismatch at member " + std::to_string(i) + " of front " +
                      std::to_string(rep);
                return false;
            }
        }
    }

    for (int rep = 0; rep < 1000; ++rep) {
        const int n = 2 + static_cast<int>(rng.uniform_index(30));
        const std::size_t m = 2 + static_cast<std::size_t>(rng.uniform_index(60));
        const std::vector<ObjectiveVector> front =
            rep % 2 == 0 ? oracle::random_line_front(n, m, rng)
                         : oracle::random_lotz_first_front(n, m, rng);
        for (const TieOrder order : {TieOrder::IndexStable, TieOrder::Randomized}) {
            const std::vector<CrowdingDistance> dist = moea::crowding_distances(front, rng, order);
            std::map<std::pair<int, int>, int> positive;
            for (std::size_t i = 0; i < front.size(); ++i)
                if (dist[i].is_infinite() || dist[i].value() > Rational(0, 1))
                    ++positive[{front[i].f1, front[i].f2}];
            for (const auto& [value, count] : positive)
                if (count > 4) {
                    why = "value (" + std::to_string(value.first) + ", " +
                          std::to_string(value.second) + ") has " + std::to_string(count) +
                          " members with positive distance";
                    return false;
                }
        }
    }

    int checked_fronts = 0;
    for (int rep = 0; rep < 500 && checked_fronts < 50; ++rep) {
        const int n = 3 + static_cast<int>(rng.uniform_index(30));
        const std::size_t m = 2 + static_cast<std::size_t>(rng.uniform_index(40));
        const std::vector<ObjectiveVector> front = oracle::random_line_front(n, m, rng);
        std::set<std::pair<int, int>> present;
        int f1_min = front.front().f1;
        int f1_max = front.front().f1;
        for (const ObjectiveVector& v : front) {
            present.insert({v.f1, v.f2});
            f1_min = std::min(f1_min, v.f1);
            f1_max = std::max(f1_max, v.f1);
        }
        if (f1_max == f1_min)
            continue;  // degenerate: one value only, every distance infinite
        ++checked_fronts;
        const Rational threshold(2, f1_max - f1_min);
        for (int shuffle = 0; shuffle < 20; ++shuffle) {
            moea::RandomSource tie_rng(90210 + 1000ull * checked_fronts + shuffle);
            const std::vector<CrowdingDistance> dist =
                moea::crowding_distances(front, tie_rng, TieOrder::Randomized);
            std::map<std::pair<int, int>, int> wide;
            for (std::size_t i = 0; i < front.size(); ++i)
                if (dist[i].is_infinite() || dist[i].value() >= threshold)
                    ++wide[{front[i].f1, front[i].f2}];
            for (const std::pair<int, int>& value : present) {
                const bool both_neighbors =
                    present.count({value.first + 1, value.second - 1}) != 0 &&
                    present.count({value.first - 1, value.second + 1}) != 0;
                const int count = wide.count(value) != 0 ? wide.at(value) : 0;
                if (!both_neighbors && count < 1) {
                    why = "no member of boundary value (" + std::to_string(value.first) + ", " +
                          std::to_string(value.second) + ") reached the threshold distance";
                    return false;
                }
                if (both_neighbors && count > 2) {
                    why = std::to_string(count) + " members of interior value (" +
                          std::to_string(value.first) + ", " + std::to_string(value.second) +
                          ") reached the threshold distance";
                    return false;
                }
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 3. With a surviving population of four times the front size, survivor
//    selection over a double-sized combined population must never drop a
//    covered value (ones-vs-zeros counting) or a best-front value
//    (prefix-suffix benchmark).  These are exact laws, not statistics.
bool survival_preserves_values(std::string& why) {
    for (const int n : {4, 8, 16}) {
        const std::size_t target = 4 * static_cast<std::size_t>(n + 1);
        const std::size_t combined = 2 * target;
        const Problem omm{ProblemKind::OneMinMax, n};
        const Problem lotz{ProblemKind::LeadingOnesTrailingZeroes, n};
        moea::RandomSource rng(90300 + static_cast<std::uint64_t>(n));

        for (int rep = 0; rep < 10000; ++rep) {
            std::vector<Bitstring> pop;
            pop.reserve(combined);
            for (std::size_t i = 0; i < combined / 2; ++i)
                pop.push_back(Bitstring::uniform(static_cast<std::size_t>(n), rng));
            for (std::size_t i = combined / 2; i < combined; ++i)
                pop.push_back(oracle::bitstring_with_ones(
                    static_cast<std::size_t>(n),
                    static_cast<std::size_t>(rng.uniform_index(static_cast<std::uint64_t>(n) + 1)),
                    rng));
            std::vector<ObjectiveVector> values;
            values.reserve(combined);
            for (const Bitstring& x : pop)
                values.push_back(moea::evaluate(omm, x));
            std::set<int> before;
            for (const ObjectiveVector& v : values)
                before.insert(v.f1);
            const moea::ScoredPopulation scored =
                moea::score_population(std::move(pop), std::move(values), rng);
            std::set<int> after;
            for (const std::size_t i : moea::survival_select(scored, target, rng))
                after.insert(scored.objectives[i].f1);
            if (after != before) {
                why = "a covered value was dropped (n=" + std::to_string(n) + ", population " +
                      std::to_string(rep) + ")";
                return false;
            }
        }

        for (int rep = 0; rep < 10000; ++rep) {
            std::vector<Bitstring> pop;
            pop.reserve(combined);
            for (std::size_t i = 0; i < combined; ++i)
                pop.push_back(Bitstring::uniform(static_cast<std::size_t>(n), rng));
            std::vector<ObjectiveVector> values;
            values.reserve(combined);
            for (const Bitstring& x : pop)
                values.push_back(moea::evaluate(lotz, x));
            const moea::ScoredPopulation scored =
                moea::score_population(std::move(pop), std::move(values), rng);
            std::set<std::pair<int, int>> best;
            for (const std::size_t i : scored.partition.fronts.front())
                best.insert({scored.objectives[i].f1, scored.objectives[i].f2});
            std::set<std::pair<int, int>> kept;
            for (const std::size_t i : moea::survival_select(scored, target, rng))
                kept.insert({scored.objectives[i].f1, scored.objectives[i].f2});
            for (const std::pair<int, int>& value : best)
                if (kept.count(value) == 0) {
                    why = "a best-front value was dropped (n=" + std::to_string(n) +
                          ", population " + std::to_string(rep) + ")";
                    return false;
                }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 4. With a population of four times the front size, the number of covered
//    front values must never decrease from one generation to the next, in
//    any of the eight scheme-mutation variants, on either benchmark.
bool coverage_is_monotone(std::string& why) {
    for (const ProblemKind kind :
         {ProblemKind::OneMinMax, ProblemKind::LeadingOnesTrailingZeroes}) {
        for (const SelectionScheme scheme : kAllSchemes)
            for (const MutationOp op : kMutations)
                for (std::uint64_t s = 0; s < 10; ++s) {
                    const RunTrace trace = run_nsga2(kind, 16, 68, scheme, op, 30000, 90400 + s);
                    for (std::size_t t = 1; t < trace.records.size(); ++t)
                        if (trace.records[t].covered_values <
                            trace.records[t - 1].covered_values) {
                            why = cell_name(scheme, op) + " on " + moea::to_string(kind) +
                                  " lost coverage at generation " + std::to_string(t);
                            return false;
                        }
                }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 5. OneMinMax at n=50 with a four-fold population: the fair and uniform
//    schemes must finish every run inside a high-probability safety budget
//    and keep their median runtime under the expected-runtime guarantee
//    (2e^2/(e-1)) n (ln n + 1); the tournament schemes must keep theirs under
//    (200e/3) n (ln n + 1).
bool oneminmax_runtime_bounds(std::string& why) {
    const int n = 50;
    const std::size_t pop = 204;
    const double log_n = std::log(static_cast<double>(n));
    const double easy_median_bound = easy_constant() * n * (log_n + 1.0);
    const auto easy_budget =
        static_cast<std::uint64_t>(std::ceil(3.0 * easy_constant() * n * log_n));
    const double tournament_median_bound = (200.0 * kE / 3.0) * n * (log_n + 1.0);
    const auto tournament_budget =
        static_cast<std::uint64_t>(std::ceil(3.0 * (200.0 * kE / 3.0) * n * log_n));

    for (const SelectionScheme scheme : kEasySchemes)
        for (const MutationOp op : kMutations) {
            std::vector<double> generations;
            for (std::uint64_t s = 0; s < 50; ++s) {
                const RunTrace trace =
                    run_nsga2(ProblemKind::OneMinMax, n, pop, scheme, op, easy_budget, 90500 + s);
                if (trace.termination != Termination::FullFrontCovered) {
                    why = cell_name(scheme, op) + " run " + std::to_string(s) +
                          " missed full coverage within the safety budget of " +
                          std::to_string(easy_budget) + " generations";
                    return false;
                }
                generations.push_back(static_cast<double>(trace.final_generation));
            }
            const double med = median_of(std::move(generations));
            if (med > easy_median_bound) {
                why = cell_name(scheme, op) + " median " + std::to_string(med) +
                      " generations exceeds the guarantee " + std::to_string(easy_median_bound);
                return false;
            }
        }

    for (const SelectionScheme scheme : kTournamentSchemes)
        for (const MutationOp op : kMutations) {
            std::vector<double> generations;
            for (std::uint64_t s = 0; s < 50; ++s)
                generations.push_back(static_cast<double>(
                    run_nsga2(ProblemKind::OneMinMax, n, pop, scheme, op, tournament_budget,
                              90550 + s)
                        .final_generation));
            const double med = median_of(std::move(generations));
            if (med > tournament_median_bound) {
                why = cell_name(scheme, op) + " median " + std::to_string(med) +
                      " generations exceeds the guarantee " +
                      std::to_string(tournament_median_bound);
                return false;
            }
        }
    return true;
}

// ---------------------------------------------------------------------------
// 6. LeadingOnesTrailingZeroes at n=30 with a four-fold population: median
//    runtimes must stay under (2e^2/(e-1)) n^2 generations for the fair and
//    uniform schemes and under 15e n^2 for the tournament schemes.
bool lotz_runtime_bounds(std::string& why) {
    const int n = 30;
    const std::size_t pop = 124;
    const double n_sq = static_cast<double>(n) * n;
    const double easy_median_bound = easy_constant() * n_sq;
    const auto easy_budget = static_cast<std::uint64_t>(std::ceil(3.0 * easy_constant() * n_sq));
    const double tournament_median_bound = 15.0 * kE * n_sq;
    const auto tournament_budget =
        static_cast<std::uint64_t>(std::ceil(3.0 * (100.0 * kE / 3.0) * n_sq));

    for (const SelectionScheme scheme : kEasySchemes)
        for (const MutationOp op : kMutations) {
            std::vector<double> generations;
            for (std::uint64_t s = 0; s < 50; ++s)
                generations.push_back(static_cast<double>(
                    run_nsga2(ProblemKind::LeadingOnesTrailingZeroes, n, pop, scheme, op,
                              easy_budget, 90600 + s)
                        .final_generation));
            const double med = median_of(std::move(generations));
            if (med > easy_median_bound) {
                why = cell_name(scheme, op) + " median " + std::to_string(med) +
                      " generations exceeds the guarantee " + std::to_string(easy_median_bound);
                return false;
            }
        }

    for (const SelectionScheme scheme : kTournamentSchemes)
        for (const MutationOp op : kMutations) {
            std::vector<double> generations;
            for (std::uint64_t s = 0; s < 50; ++s)
                generations.push_back(static_cast<double>(
                    run_nsga2(ProblemKind::LeadingOnesTrailingZeroes, n, pop, scheme, op,
                              tournament_budget, 90650 + s)
                        .final_generation));
            const double med = median_of(std::move(generations));
            if (med > tournament_median_bound) {
                why = cell_name(scheme, op) + " median " + std::to_string(med) +
                      " generations exceeds the guarantee " +
                      std::to_string(tournament_median_bound);
                return false;
            }
        }
    return true;
}

// ---------------------------------------------------------------------------
// 7. With the population only as large as the front itself (two-permutation
//    tournaments, bit-wise mutation), no run may ever cover the whole front,
//    and the pooled coverage over the trailing third of the budget must sit
//    in the empirically expected stagnation band.
bool minimal_population_stagnates(std::string& why) {
    struct StagnationCase {
        ProblemKind kind;
        int n;
        std::uint64_t budget;
        std::uint64_t window_lo;
        double lo;
        double hi;
        std::uint64_t seed_base;
    };
    const StagnationCase cases[] = {
        {ProblemKind::OneMinMax, 200, 3000, 2001, 0.70, 0.90, 90700},
        {ProblemKind::LeadingOnesTrailingZeroes, 120, 5000, 4001, 0.45, 0.70, 90750},
    };
    for (const StagnationCase& c : cases) {
        const int front_size = c.n + 1;
        std::vector<double> pool;
        pool.reserve(20 * static_cast<std::size_t>(c.budget - c.window_lo + 1));
        for (std::uint64_t s = 0; s < 20; ++s) {
            const RunTrace trace = run_nsga2(c.kind, c.n, static_cast<std::size_t>(front_size),
                                             SelectionScheme::TwoPermutationTournaments,
                                             MutationOp::Bitwise, c.budget, c.seed_base + s);
            for (const TraceRecord& record : trace.records)
                if (record.covered_values == front_size) {
                    why = std::string(moea::to_string(c.kind)) + " run " + std::to_string(s) +
                          " reached full coverage at generation " +
                          std::to_string(record.generation);
                    return false;
                }
            for (std::uint64_t t = c.window_lo; t <= c.budget; ++t)
                pool.push_back(static_cast<double>(trace.records[t].covered_values) / front_size);
        }
        const double med = median_of(std::move(pool));
        if (med < c.lo || med > c.hi) {
            why = std::string(moea::to_string(c.kind)) + " window median " + std::to_string(med) +
                  " outside [" + std::to_string(c.lo) + ", " + std::to_string(c.hi) + "]";
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// 8. At front-sized population on OneMinMax, every one of the eight variants
//    must stagnate below full coverage over the trailing window, and within
//    each selection scheme the bit-wise variant must cover less than the
//    one-bit variant.  A run that covers early contributes full coverage for
//    its missing window generations (working against stagnation).
bool bitwise_covers_less(std::string& why) {
    const int n = 200;
    const double front_size = 201.0;
    const std::uint64_t budget = 3000;
    double medians[4][2];
    for (std::size_t si = 0; si < 4; ++si)
        for (std::size_t oi = 0; oi < 2; ++oi) {
            std::vector<double> pool;
            pool.reserve(20000);
            for (std::uint64_t s = 0; s < 20; ++s) {
                const RunTrace trace = run_nsga2(ProblemKind::OneMinMax, n, 201, kAllSchemes[si],
                                                 kMutations[oi], budget, 90800 + s);
                for (std::uint64_t t = 2001; t <= budget; ++t)
                    pool.push_back(t < trace.records.size()
                                       ? trace.records[t].covered_values / front_size
                                       : 1.0);
            }
            medians[si][oi] = median_of(std::move(pool));
            if (medians[si][oi] >= 1.0) {
                why = cell_name(kAllSchemes[si], kMutations[oi]) +
                      " window median reached full coverage";
                return false;
            }
        }
    for (std::size_t si = 0; si < 4; ++si)
        if (!(medians[si][1] < medians[si][0])) {
            why = std::string(moea::to_string(kAllSchemes[si])) + ": bit-wise window median " +
                  std::to_string(medians[si][1]) + " is not below the one-bit median " +
                  std::to_string(medians[si][0]);
            return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// 9. Front-sized populations (two-permutation tournaments, bit-wise
//    mutation) must spread evenly: after the budget, the longest uncovered
//    stretch of the front stays small in every run, and on the prefix-suffix
//    benchmark every surviving individual lies on the front.  A single small
//    exceedance is flagged distinctly for investigation but still fails.
bool snapshot_gaps_small(std::string& why) {
    struct Grid {
        ProblemKind kind;
        std::vector<int> ns;
        std::uint64_t budget;
        int limit;
        std::uint64_t seed_base;
    };
    const Grid grids[] = {
        {ProblemKind::OneMinMax, {100, 200, 300, 400}, 3000, 6, 90900},
        {ProblemKind::LeadingOnesTrailingZeroes, {30, 60, 90, 120}, 5000, 4, 90950},
    };
    int exceedances = 0;
    int worst_over = 0;
    std::string first_detail;
    for (const Grid& grid : grids) {
        for (const int n : grid.ns) {
            const ParetoFront front(n);
            for (std::uint64_t s = 0; s < 20; ++s) {
                const RunTrace trace = run_nsga2(grid.kind, n, static_cast<std::size_t>(n) + 1,
                                                 SelectionScheme::TwoPermutationTournaments,
                                                 MutationOp::Bitwise, grid.budget,
                                                 grid.seed_base + s);
                const int gap = moea::max_uncovered_gap(trace.final_population_objectives, front);
                if (gap > grid.limit) {
                    ++exceedances;
                    worst_over = std::max(worst_over, gap - grid.limit);
                    if (first_detail.empty())
                        first_detail = std::string(moea::to_string(grid.kind)) + " n=" +
                                       std::to_string(n) + " run " + std::to_string(s) + " gap " +
                                       std::to_string(gap) + " (limit " +
                                       std::to_string(grid.limit) + ")";
                }
                if (grid.kind == ProblemKind::LeadingOnesTrailingZeroes)
                    for (const ObjectiveVector& v : trace.final_population_objectives)
                        if (!front.contains(v)) {
                            why = "off-front final individual (" + std::to_string(v.f1) + ", " +
                                  std::to_string(v.f2) + ") at n=" + std::to_string(n) + " run " +
                                  std::to_string(s);
                            return false;
                        }
            }
        }
    }
    if (exceedances == 1 && worst_over <= 2) {
        why = "SOFT-FAIL (single exceedance by " + std::to_string(worst_over) +
              ", investigate before trusting the build): " + first_detail;
        return false;
    }
    if (exceedances > 0) {
        why = std::to_string(exceedances) + " runs exceeded their gap limit; first: " +
              first_detail;
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// 10. With a four-fold population (two-permutation tournaments, bit-wise
//     mutation) the generational algorithm must need fewer median fitness
//     evaluations to cover the front than the archive-based GSEMO baseline.
bool nsga2_beats_gsemo(std::string& why) {
    struct Duel {
        ProblemKind kind;
        int n;
        std::uint64_t nsga_budget;
        std::uint64_t gsemo_budget;
        std::uint64_t seed_base;
    };
    const double log100 = std::log(100.0);
    const Duel duels[] = {
        {ProblemKind::OneMinMax, 100,
         static_cast<std::uint64_t>(std::ceil(3.0 * (200.0 * kE / 3.0) * 100.0 * log100)),
         static_cast<std::uint64_t>(std::ceil(100.0 * 100.0 * 100.0 * (log100 + 1.0))), 91000},
        {ProblemKind::LeadingOnesTrailingZeroes, 30,
         static_cast<std::uint64_t>(std::ceil(3.0 * (100.0 * kE / 3.0) * 900.0)),
         100ull * 30 * 30 * 30, 91050},
    };
    std::string detail;
    bool all_hold = true;
    for (const Duel& duel : duels) {
        const std::size_t pop = 4 * static_cast<std::size_t>(duel.n + 1);
        std::vector<double> nsga_evals;
        std::vector<double> gsemo_evals;
        for (std::uint64_t s = 0; s < 50; ++s) {
            const RunTrace a =
                run_nsga2(duel.kind, duel.n, pop, SelectionScheme::TwoPermutationTournaments,
                          MutationOp::Bitwise, duel.nsga_budget, duel.seed_base + s);
            if (a.termination != Termination::FullFrontCovered) {
                why = std::string(moea::to_string(duel.kind)) + " generational run " +
                      std::to_string(s) + " missed full coverage within its safety budget";
                return false;
            }
            nsga_evals.push_back(static_cast<double>(a.evaluations));

            EngineConfig config;
            config.problem = {duel.kind, duel.n};
            config.max_generations = duel.gsemo_budget;
            config.seed = duel.seed_base + 500 + s;
            const RunTrace b = moea::gsemo_run(config);
            if (b.termination != Termination::FullFrontCovered) {
                why = std::string(moea::to_string(duel.kind)) + " archive run " +
                      std::to_string(s) + " missed full coverage within its safety budget";
                return false;
            }
            gsemo_evals.push_back(static_cast<double>(b.evaluations));
        }
        const double nsga_median = median_of(std::move(nsga_evals));
        const double gsemo_median = median_of(std::move(gsemo_evals));
        // Both duels always run so the verdict line reports each benchmark.
        char line[160];
        std::snprintf(line, sizeof line, "%s: generational median %.1f vs archive median %.1f (%s)",
                      moea::to_string(duel.kind), nsga_median, gsemo_median,
                      nsga_median < gsemo_median ? "holds" : "NOT below");
        if (!detail.empty())
            detail += "; ";
        detail += line;
        if (!(nsga_median < gsemo_median))
            all_hold = false;
    }
    if (!all_hold) {
        why = detail;
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// 11. Re-running an experiment with the same specification must produce
//     byte-identical raw and summary CSVs, whether dispatched on one worker
//     thread or on eight.
bool outputs_are_deterministic(std::string& why) {
    namespace fs = std::filesystem;
    const fs::path base = "acceptance-determinism";
    std::error_code ec;
    fs::remove_all(base, ec);

    const char* spec_texts[] = {
        "experiment = runtime_curve\nproblem = oneminmax\nn = 8, 10\nN = 2(n+1)\n"
        "scheme = uniform\nmutation = bitwise\nruns = 3\nbase_seed = 7\n",
        "experiment = coverage_trace\nproblem = lotz\nn = 8\nN = 5\n"
        "scheme = two_permutation_tournaments\nmutation = one_bit\nruns = 3\n"
        "base_seed = 11\nbudget = 60\n",
    };
    int index = 0;
    for (const char* text : spec_texts) {
        std::istringstream in(text);
        const moea::ExperimentSpec spec = moea::parse_spec_text(in);
        const fs::path one = base / ("spec" + std::to_string(index) + "-threads1");
        const fs::path eight = base / ("spec" + std::to_string(index) + "-threads8");
        const fs::path again = base / ("spec" + std::to_string(index) + "-again");
        moea::run_experiment(spec, one, 1);
        moea::run_experiment(spec, eight, 8);
        moea::run_experiment(spec, again, 8);
        for (const char* file : {"raw.csv", "summary.csv"}) {
            const std::string a = slurp(one / file);
            const std::string b = slurp(eight / file);
            const std::string c = slurp(again / file);
            if (a.empty() || a != b || b != c) {
                why = std::string(file) + " differs across thread counts or reruns (spec " +
                      std::to_string(index) + ")";
                return false;
            }
        }
        ++index;
    }
    fs::remove_all(base, ec);
    return true;
}

// ---------------------------------------------------------------------------

struct Criterion {
    int number;
    const char* label;
    bool (*check)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "non-dominated sorting matches the definitional oracle", sorting_matches_oracle},
    {2, "crowding distances are exact and obey the density laws", crowding_laws_hold},
    {3, "survival keeps every covered value at four-fold population size",
     survival_preserves_values},
    {4, "front coverage never decreases during a run", coverage_is_monotone},
    {5, "OneMinMax runtime guarantees hold at four-fold population size",
     oneminmax_runtime_bounds},
    {6, "LeadingOnesTrailingZeroes runtime guarantees hold at four-fold population size",
     lotz_runtime_bounds},
    {7, "front-sized populations stagnate below full coverage", minimal_population_stagnates},
    {8, "bit-wise mutation covers less than one-bit at front size", bitwise_covers_less},
    {9, "front-sized populations leave only small uncovered gaps", snapshot_gaps_small},
    {10, "NSGA-II with a four-fold population beats GSEMO on evaluations", nsga2_beats_gsemo},
    {11, "outputs are byte-identical across reruns and thread counts",
     outputs_are_deterministic},
};

int run_criterion(const Criterion& criterion) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
        ok = criterion.check(why);
    } catch (const std::exception& error) {
        ok = false;
        why = std::string("unexpected exception: ") + error.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok)
        std::printf("[%d] PASS %s (%.1f s)\n", criterion.number, criterion.label, seconds);
    else
        std::printf("[%d] FAIL %s: %s (%.1f s)\n", criterion.number, criterion.label, why.c_str(),
                    seconds);
    std::fflush(stdout);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 2) {
        std::fprintf(stderr, "usage: %s [criterion 1..11]\n", argv[0]);
        return 2;
    }
    int failures = 0;
    if (argc == 2) {
        const int k = std::atoi(argv[1]);
        if (k < 1 || k > 11) {
            std::fprintf(stderr, "usage: %s [criterion 1..11]\n", argv[0]);
            return 2;
        }
        failures += run_criterion(kCriteria[k - 1]);
    } else {
        for (const Criterion& criterion : kCriteria)
            failures += run_criterion(criterion);
    }
    return failures == 0 ? 0 : 1;
}
