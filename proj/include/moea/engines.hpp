#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "benchmarks.hpp"
#include "core.hpp"
#include "crowding.hpp"
#include "random.hpp"
#include "selection.hpp"
#include "variation.hpp"

namespace moea {

// One run's configuration.  initial_population is a testing hook that
// replaces only the random initialization; population_size is ignored by the
// archive algorithms (semo_run / gsemo_run), which also fix their mutation
// operator themselves.
struct EngineConfig {
    Problem problem;
    std::size_t population_size = 0;
    SelectionScheme scheme = SelectionScheme::EachParentOnce;
    MutationOp mutation = MutationOp::OneBit;
    std::uint64_t max_generations = 0;
    std::uint64_t seed = 0;
    std::optional<std::vector<Bitstring>> initial_population;
    TieOrder tie_order = TieOrder::Randomized;
};

// Per-generation coverage snapshot of the parent population (or archive):
// how many of the n+1 Pareto-front values are present, and whether the two
// extreme values (0, n) and (n, 0) are among them.
struct TraceRecord {
    std::uint64_t generation = 0;
    int covered_values = 0;
    bool has_extreme_0n = false;
    bool has_extreme_n0 = false;

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

enum class Termination { FullFrontCovered, BudgetExhausted };

struct RunTrace {
    std::vector<TraceRecord> records;  // records[t] describes generation t
    Termination termination = Termination::BudgetExhausted;
    std::uint64_t final_generation = 0;
    std::uint64_t evaluations = 0;
    std::vector<ObjectiveVector> final_population_objectives;

    friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

namespace detail {

inline TraceRecord coverage_record(std::uint64_t generation,
                                   const std::vector<ObjectiveVector>& objectives, int n) {
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const ObjectiveVector& v : objectives)
        if (v.f1 >= 0 && v.f1 <= n && v.f1 + v.f2 == n)
            seen[static_cast<std::size_t>(v.f1)] = 1;
    TraceRecord record;
    record.generation = generation;
    for (char s : seen)
        record.covered_values += s;
    record.has_extreme_0n = seen.front() != 0;
    record.has_extreme_n0 = seen.back() != 0;
    return record;
}

}  // namespace detail

// One NSGA-II run.  Per generation the RNG stream is consumed in a fixed
// order: score the parents (crowding tie shuffles), draw the parent
// selection, mutate the parents in emission order, score the combined
// population, shuffle for survivor selection.  Every evaluate() call is
// counted once, and survivors carry their objective values forward, so
// evaluations == population_size * (1 + completed generations).
inline RunTrace nsga2_run(const EngineConfig& config) {
    check_problem(config.problem);
    const std::size_t pop_size = config.population_size;
    const std::size_t n = static_cast<std::size_t>(config.problem.n);
    if (pop_size < 2)
        throw std::invalid_argument("nsga2_run: population size must be at least 2");
    if (config.initial_population) {
        if (config.initial_population->size() != pop_size)
            throw std::invalid_argument("nsga2_run: initial population size mismatch");
        for (const Bitstring& x : *config.initial_population)
            if (x.size() != n)
                throw std::invalid_argument("nsga2_run: initial individual has wrong length");
    }

    RandomSource rng(config.seed);
    RunTrace trace;

    std::vector<Bitstring> population;
    population.reserve(pop_size);
    if (config.initial_population) {
        population = *config.initial_population;
    } else {
        for (std::size_t i = 0; i < pop_size; ++i)
            population.push_back(Bitstring::uniform(n, rng));
    }

    std::vector<ObjectiveVector> objectives;
    objectives.reserve(pop_size);
    for (const Bitstring& x : population)
        objectives.push_back(evaluate(config.problem, x));
    trace.evaluations = pop_size;

    const int full = config.problem.n + 1;
    TraceRecord record = detail::coverage_record(0, objectives, config.problem.n);
    trace.records.push_back(record);

    std::uint64_t generation = 0;
    while (record.covered_values < full && generation < config.max_generations) {
        ++generation;

        ScoredPopulation parents = score_population(std::move(population), std::move(objectives),
                                                    rng, config.tie_order);
        const std::vector<std::size_t> chosen = select_parents(config.scheme, parents, rng);

        std::vector<Bitstring> combined = std::move(parents.individuals);
        std::vector<ObjectiveVector> combined_objectives = std::move(parents.objectives);
        combined.reserve(2 * pop_size);
        combined_objectives.reserve(2 * pop_size);
        for (std::size_t parent : chosen) {
            combined.push_back(mutate(combined[parent], config.mutation, rng));
            combined_objectives.push_back(evaluate(config.problem, combined.back()));
        }
        trace.evaluations += pop_size;

        ScoredPopulation scored = score_population(std::move(combined),
                                                   std::move(combined_objectives), rng,
                                                   config.tie_order);
        const std::vector<std::size_t> survivors = survival_select(scored, pop_size, rng);

        population.clear();
        objectives.clear();
        for (std::size_t i : survivors) {
            population.push_back(std::move(scored.individuals[i]));
            objectives.push_back(scored.objectives[i]);
        }

        record = detail::coverage_record(generation, objectives, config.problem.n);
        trace.records.push_back(record);
    }

    trace.termination = record.covered_values == full ? Termination::FullFrontCovered
                                                      : Termination::BudgetExhausted;
    trace.final_generation = generation;
    trace.final_population_objectives = std::move(objectives);
    return trace;
}

namespace detail {

// Shared loop of the archive algorithms: one uniform parent per iteration,
// one mutation; the child enters the archive iff no member weakly dominates
// it, evicting every member it weakly dominates.  The archive therefore never
// holds two individuals with equal objective value.
inline RunTrace archive_run(const EngineConfig& config, MutationOp op) {
    check_problem(config.problem);
    const std::size_t n = static_cast<std::size_t>(config.problem.n);

    RandomSource rng(config.seed);
    RunTrace trace;

    std::vector<Bitstring> archive;
    std::vector<ObjectiveVector> archive_objectives;

    const auto admit = [&](Bitstring x, const ObjectiveVector& v) {
        for (const ObjectiveVector& held : archive_objectives)
            if (weakly_dominates(held, v))
                return;
        std::size_t out = 0;
        for (std::size_t i = 0; i < archive.size(); ++i) {
            if (!weakly_dominates(v, archive_objectives[i])) {
                if (out != i) {
                    archive[out] = std::move(archive[i]);
                    archive_objectives[out] = archive_objectives[i];
                }
                ++out;
            }
        }
        archive.erase(archive.begin() + static_cast<std::ptrdiff_t>(out), archive.end());
        archive_objectives.resize(out);
        archive.push_back(std::move(x));
        archive_objectives.push_back(v);
    };

    if (config.initial_population) {
        for (const Bitstring& x : *config.initial_population) {
            if (x.size() != n)
                throw std::invalid_argument("archive run: initial individual has wrong length");
            admit(x, evaluate(config.problem, x));
            ++trace.evaluations;
        }
        if (archive.empty())
            throw std::invalid_argument("archive run: empty initial population");
    } else {
        Bitstring x = Bitstring::uniform(n, rng);
        admit(x, evaluate(config.problem, x));
        trace.evaluations = 1;
    }

    const int full = config.problem.n + 1;
    TraceRecord record = detail::coverage_record(0, archive_objectives, config.problem.n);
    trace.records.push_back(record);

    std::uint64_t iteration = 0;
    while (record.covered_values < full && iteration < config.max_generations) {
        ++iteration;
        const std::size_t parent = static_cast<std::size_t>(rng.uniform_index(archive.size()));
        Bitstring child = mutate(archive[parent], op, rng);
        const ObjectiveVector value = evaluate(config.problem, child);
        ++trace.evaluations;
        admit(std::move(child), value);

        record = detail::coverage_record(iteration, archive_objectives, config.problem.n);
        trace.records.push_back(record);
    }

    trace.termination = record.covered_values == full ? Termination::FullFrontCovered
                                                      : Termination::BudgetExhausted;
    trace.final_generation = iteration;
    trace.final_population_objectives = archive_objectives;
    return trace;
}

}  // namespace detail

// Archive EA with one-bit mutation.
inline RunTrace semo_run(const EngineConfig& config) {
    return detail::archive_run(config, MutationOp::OneBit);
}

// Archive EA with independent bitwise mutation.
inline RunTrace gsemo_run(const EngineConfig& config) {
    return detail::archive_run(config, MutationOp::Bitwise);
}

}  // namespace moea
