#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "engines.hpp"
#include "metrics.hpp"
#include "rational.hpp"

namespace moea {

struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind {
    RuntimeCurve,        // run until full coverage, report generations/evaluations
    CoverageTrace,       // per-generation coverage over a fixed budget
    VariantComparison,   // coverage of all 8 scheme x mutation variants in a window
    ExtremesDiscovery,   // first generation holding both extreme values
    FrontSnapshot,       // final population objectives at a fixed generation
};

enum class Algorithm { Nsga2, Semo, Gsemo };

inline const char* to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::RuntimeCurve: return "runtime_curve";
        case ExperimentKind::CoverageTrace: return "coverage_trace";
        case ExperimentKind::VariantComparison: return "variant_comparison";
        case ExperimentKind::ExtremesDiscovery: return "extremes_discovery";
        case ExperimentKind::FrontSnapshot: return "front_snapshot";
    }
    throw std::invalid_argument("to_string: unknown ExperimentKind");
}

inline const char* to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Nsga2: return "nsga2";
        case Algorithm::Semo: return "semo";
        case Algorithm::Gsemo: return "gsemo";
    }
    throw std::invalid_argument("to_string: unknown Algorithm");
}

// Population-size rule: an absolute value ("204") or a rational multiple of
// the front size ("4(n+1)", "1.5(n+1)", "3/2(n+1)").  Fractional multiples
// resolve to the nearest integer, halves rounding up.
struct PopulationRule {
    bool absolute = true;
    std::int64_t value = 0;   // absolute form
    Rational factor;          // multiplier form
    std::string text;         // as written, for metadata

    static PopulationRule parse(std::string_view s);
    std::size_t resolve(int n) const {
        if (absolute) {
            if (value < 1)
                throw SpecError("population size must be positive");
            return static_cast<std::size_t>(value);
        }
        const std::int64_t p = factor.num() * (static_cast<std::int64_t>(n) + 1);
        const std::int64_t q = factor.den();
        const std::int64_t rounded = (2 * p + q) / (2 * q);  // floor(p/q + 1/2)
        if (rounded < 1)
            throw SpecError("population rule resolves to a non-positive size");
        return static_cast<std::size_t>(rounded);
    }
};

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::RuntimeCurve;
    Algorithm algorithm = Algorithm::Nsga2;
    ProblemKind problem = ProblemKind::OneMinMax;
    std::vector<int> ns;
    std::optional<PopulationRule> population;
    SelectionScheme scheme = SelectionScheme::EachParentOnce;
    MutationOp mutation = MutationOp::OneBit;
    int runs = 0;
    std::uint64_t base_seed = 0;
    std::uint64_t budget = 0;               // 0: per-kind default
    std::uint64_t snapshot_generation = 0;  // 0: defaults to the budget
    std::optional<std::pair<std::uint64_t, std::uint64_t>> window;
    TieOrder tie_order = TieOrder::Randomized;
};

// Five-number summary; quantiles use linear interpolation between the two
// closest ranks (h = (count - 1) * p).
struct SummaryStats {
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

inline double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty())
        throw std::invalid_argument("quantile_sorted: empty sample");
    const double h = static_cast<double>(sorted.size() - 1) * p;
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size())
        return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

inline SummaryStats aggregate(std::vector<double> values) {
    if (values.empty())
        throw std::invalid_argument("aggregate: empty sample");
    std::sort(values.begin(), values.end());
    return {values.front(), quantile_sorted(values, 0.25), quantile_sorted(values, 0.5),
            quantile_sorted(values, 0.75), values.back()};
}

// Expected-runtime guarantees (in generations) for the NSGA-II at an adequate
// population size; runtime experiments default to 100x these as a safety
// budget.
inline std::uint64_t guarantee_bound_generations(ProblemKind problem, SelectionScheme scheme,
                                                 int n) {
    const double e = std::numbers::e;
    const bool tournament = scheme == SelectionScheme::IndependentTournaments ||
                            scheme == SelectionScheme::TwoPermutationTournaments;
    const double nn = static_cast<double>(n);
    double bound = 0;
    if (problem == ProblemKind::OneMinMax) {
        const double growth = nn * (std::log(nn) + 1.0);
        bound = tournament ? (200.0 * e / 3.0) * growth : (2.0 * e * e / (e - 1.0)) * growth;
    } else {
        bound = tournament ? 15.0 * e * nn * nn : (2.0 * e * e / (e - 1.0)) * nn * nn;
    }
    return static_cast<std::uint64_t>(std::ceil(bound));
}

namespace detail {

inline std::uint64_t default_budget(const ExperimentSpec& spec, SelectionScheme scheme, int n) {
    switch (spec.kind) {
        case ExperimentKind::CoverageTrace:
        case ExperimentKind::VariantComparison:
        case ExperimentKind::ExtremesDiscovery:
        case ExperimentKind::FrontSnapshot:
            return spec.problem == ProblemKind::OneMinMax ? 3000 : 5000;
        case ExperimentKind::RuntimeCurve:
            break;
    }
    if (spec.algorithm == Algorithm::Nsga2)
        return 100 * guarantee_bound_generations(spec.problem, scheme, n);
    // Archive algorithms: 100x the known asymptotic expectations.
    const double nn = static_cast<double>(n);
    const double expectation = spec.problem == ProblemKind::OneMinMax
                                   ? nn * nn * (std::log(nn) + 1.0)
                                   : nn * nn * nn;
    return static_cast<std::uint64_t>(std::ceil(100.0 * expectation));
}

}  // namespace detail

inline PopulationRule PopulationRule::parse(std::string_view s) {
    std::string text(s);
    if (text.empty())
        throw SpecError("empty population rule");
    PopulationRule rule;
    rule.text = text;
    std::string_view body = s;
    const std::string_view suffix = "(n+1)";
    const bool multiplier = body.size() >= suffix.size() &&
                            body.substr(body.size() - suffix.size()) == suffix;
    if (multiplier)
        body = body.substr(0, body.size() - suffix.size());
    const std::string num_text(body);
    try {
        if (multiplier) {
            rule.absolute = false;
            if (num_text.empty()) {
                rule.factor = Rational(1, 1);
            } else if (num_text.find('/') != std::string::npos) {
                const std::size_t slash = num_text.find('/');
                rule.factor = Rational(std::stoll(num_text.substr(0, slash)),
                                       std::stoll(num_text.substr(slash + 1)));
            } else if (num_text.find('.') != std::string::npos) {
                const std::size_t dot = num_text.find('.');
                const std::string whole = num_text.substr(0, dot);
                const std::string frac = num_text.substr(dot + 1);
                if (frac.empty() || frac.size() > 9)
                    throw SpecError("bad decimal in population rule: " + text);
                std::int64_t den = 1;
                for (std::size_t i = 0; i < frac.size(); ++i)
                    den *= 10;
                const std::int64_t whole_v = whole.empty() ? 0 : std::stoll(whole);
                rule.factor = Rational(whole_v * den + std::stoll(frac), den);
            } else {
                rule.factor = Rational(std::stoll(num_text), 1);
            }
            if (rule.factor <= Rational(0, 1))
                throw SpecError("population multiplier must be positive: " + text);
        } else {
            rule.absolute = true;
            std::size_t used = 0;
            rule.value = std::stoll(num_text, &used);
            if (used != num_text.size())
                throw SpecError("bad population size: " + text);
        }
    } catch (const std::invalid_argument&) {
        throw SpecError("bad population rule: " + text);
    } catch (const std::out_of_range&) {
        throw SpecError("population rule out of range: " + text);
    }
    return rule;
}

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

inline std::uint64_t parse_u64(const std::string& value, const std::string& key) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw SpecError("bad unsigned integer for '" + key + "': " + value);
    return out;
}

inline int parse_int(const std::string& value, const std::string& key) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw SpecError("bad integer for '" + key + "': " + value);
    return out;
}

}  // namespace detail

// Apply one "key=value" assignment (the config-file line format and the CLI
// override format are identical).
inline void apply_assignment(ExperimentSpec& spec, const std::string& key,
                             const std::string& value) {
    if (key == "experiment") {
        if (value == "runtime_curve") spec.kind = ExperimentKind::RuntimeCurve;
        else if (value == "coverage_trace") spec.kind = ExperimentKind::CoverageTrace;
        else if (value == "variant_comparison") spec.kind = ExperimentKind::VariantComparison;
        else if (value == "extremes_discovery") spec.kind = ExperimentKind::ExtremesDiscovery;
        else if (value == "front_snapshot") spec.kind = ExperimentKind::FrontSnapshot;
        else throw SpecError("unknown experiment kind: " + value);
    } else if (key == "algorithm") {
        if (value == "nsga2") spec.algorithm = Algorithm::Nsga2;
        else if (value == "semo") spec.algorithm = Algorithm::Semo;
        else if (value == "gsemo") spec.algorithm = Algorithm::Gsemo;
        else throw SpecError("unknown algorithm: " + value);
    } else if (key == "problem") {
        if (value == "oneminmax") spec.problem = ProblemKind::OneMinMax;
        else if (value == "lotz") spec.problem = ProblemKind::LeadingOnesTrailingZeroes;
        else throw SpecError("unknown problem: " + value);
    } else if (key == "n") {
        spec.ns.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const std::string t = detail::trim(item);
            if (t.empty())
                throw SpecError("empty entry in n list: " + value);
            spec.ns.push_back(detail::parse_int(t, key));
        }
        if (spec.ns.empty())
            throw SpecError("empty n list");
    } else if (key == "N") {
        spec.population = PopulationRule::parse(value);
    } else if (key == "scheme") {
        if (value == "each_parent_once") spec.scheme = SelectionScheme::EachParentOnce;
        else if (value == "uniform") spec.scheme = SelectionScheme::UniformRandom;
        else if (value == "independent_tournaments")
            spec.scheme = SelectionScheme::IndependentTournaments;
        else if (value == "two_permutation_tournaments")
            spec.scheme = SelectionScheme::TwoPermutationTournaments;
        else throw SpecError("unknown scheme: " + value);
    } else if (key == "mutation") {
        if (value == "one_bit") spec.mutation = MutationOp::OneBit;
        else if (value == "bitwise") spec.mutation = MutationOp::Bitwise;
        else throw SpecError("unknown mutation: " + value);
    } else if (key == "runs") {
        spec.runs = detail::parse_int(value, key);
    } else if (key == "base_seed") {
        spec.base_seed = detail::parse_u64(value, key);
    } else if (key == "budget") {
        spec.budget = detail::parse_u64(value, key);
    } else if (key == "snapshot_generation") {
        spec.snapshot_generation = detail::parse_u64(value, key);
    } else if (key == "window") {
        const std::size_t sep = value.find("..");
        if (sep == std::string::npos)
            throw SpecError("window must be '<lo>..<hi>': " + value);
        const std::uint64_t lo = detail::parse_u64(detail::trim(value.substr(0, sep)), key);
        const std::uint64_t hi = detail::parse_u64(detail::trim(value.substr(sep + 2)), key);
        if (lo > hi)
            throw SpecError("window bounds out of order: " + value);
        spec.window = {lo, hi};
    } else if (key == "tie_order") {
        if (value == "randomized") spec.tie_order = TieOrder::Randomized;
        else if (value == "index_stable") spec.tie_order = TieOrder::IndexStable;
        else throw SpecError("unknown tie order: " + value);
    } else {
        throw SpecError("unknown spec key: " + key);
    }
}

// Flat key = value text, one assignment per line; '#' starts a comment.
inline ExperimentSpec parse_spec_text(std::istream& in) {
    ExperimentSpec spec;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        const std::string stripped = detail::trim(line);
        if (stripped.empty())
            continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw SpecError("line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = detail::trim(stripped.substr(0, eq));
        const std::string value = detail::trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw SpecError("line " + std::to_string(lineno) + ": expected 'key = value'");
        apply_assignment(spec, key, value);
    }
    return spec;
}

inline ExperimentSpec parse_spec_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw SpecError("cannot read spec file: " + path.string());
    return parse_spec_text(in);
}

namespace detail {

struct Variant {
    Algorithm algorithm = Algorithm::Nsga2;
    SelectionScheme scheme = SelectionScheme::EachParentOnce;
    MutationOp mutation = MutationOp::OneBit;

    const char* scheme_label() const {
        return algorithm == Algorithm::Nsga2 ? to_string(scheme) : to_string(algorithm);
    }
};

struct PlannedRun {
    int n = 0;
    std::size_t population_size = 0;  // 0 for archive algorithms
    Variant variant;
    std::uint64_t budget = 0;
    std::uint64_t window_lo = 0;
    std::uint64_t window_hi = 0;
    std::uint64_t seed = 0;
    int run_index = 0;
};

struct RunResult {
    std::string raw_rows;
    std::uint64_t generations = 0;
    std::uint64_t evaluations = 0;
    bool full_coverage = false;
    std::vector<double> window_coverage;
    std::optional<std::uint64_t> first_both;
    int max_gap = 0;
};

inline std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

struct Plan {
    std::vector<int> ns;
    std::vector<Variant> variants;
    std::vector<PlannedRun> tasks;  // n-major, then variant, then run
    std::string population_text;
    std::vector<std::size_t> population_by_n;
    std::vector<std::uint64_t> budget_by_n;  // for the first variant (metadata)
    std::pair<std::uint64_t, std::uint64_t> window_by_n(std::uint64_t budget) const {
        return {budget >= 1000 ? budget - 999 : 1, budget};
    }
};

inline Plan build_plan(const ExperimentSpec& spec) {
    if (spec.ns.empty())
        throw SpecError("spec needs at least one n");
    for (int n : spec.ns)
        if (n < 1)
            throw SpecError("problem size n must be positive");
    if (spec.runs < 1)
        throw SpecError("spec needs runs >= 1");
    if (spec.kind == ExperimentKind::FrontSnapshot && spec.ns.size() != 1)
        throw SpecError("front_snapshot takes exactly one n per experiment");
    if (spec.kind == ExperimentKind::VariantComparison && spec.algorithm != Algorithm::Nsga2)
        throw SpecError("variant_comparison runs the NSGA-II variants only");

    Plan plan;
    plan.ns = spec.ns;

    if (spec.kind == ExperimentKind::VariantComparison) {
        for (SelectionScheme scheme :
             {SelectionScheme::EachParentOnce, SelectionScheme::UniformRandom,
              SelectionScheme::IndependentTournaments,
              SelectionScheme::TwoPermutationTournaments})
            for (MutationOp mutation : {MutationOp::OneBit, MutationOp::Bitwise})
                plan.variants.push_back({Algorithm::Nsga2, scheme, mutation});
    } else if (spec.algorithm == Algorithm::Nsga2) {
        plan.variants.push_back({Algorithm::Nsga2, spec.scheme, spec.mutation});
    } else {
        const MutationOp op = spec.algorithm == Algorithm::Semo ? MutationOp::OneBit
                                                                : MutationOp::Bitwise;
        plan.variants.push_back({spec.algorithm, spec.scheme, op});
    }

    PopulationRule rule;
    if (spec.algorithm == Algorithm::Nsga2) {
        if (spec.population) {
            rule = *spec.population;
        } else if (spec.kind == ExperimentKind::VariantComparison) {
            rule = PopulationRule::parse("(n+1)");  // the regime this experiment studies
        } else {
            throw SpecError("spec needs a population size rule N");
        }
        plan.population_text = rule.text;
    } else {
        plan.population_text = "n/a";
    }

    for (int n : plan.ns) {
        std::size_t pop_size = 0;
        if (spec.algorithm == Algorithm::Nsga2) {
            pop_size = rule.resolve(n);
            if (pop_size < 2)
                throw SpecError("population size must be at least 2 (n = " + std::to_string(n) + ")");
        }
        plan.population_by_n.push_back(pop_size);

        bool first_variant = true;
        for (const Variant& variant : plan.variants) {
            std::uint64_t budget = spec.budget;
            if (budget == 0)
                budget = default_budget(spec, variant.scheme, n);
            if (spec.kind == ExperimentKind::FrontSnapshot) {
                if (spec.snapshot_generation != 0)
                    budget = spec.snapshot_generation;
            }
            if (first_variant) {
                plan.budget_by_n.push_back(budget);
                first_variant = false;
            }

            auto [window_lo, window_hi] = spec.window ? *spec.window : plan.window_by_n(budget);

            for (int run = 0; run < spec.runs; ++run) {
                PlannedRun task;
                task.n = n;
                task.population_size = pop_size;
                task.variant = variant;
                task.budget = budget;
                task.window_lo = window_lo;
                task.window_hi = window_hi;
                task.seed = spec.base_seed + static_cast<std::uint64_t>(run);
                task.run_index = run;
                plan.tasks.push_back(task);
            }
        }
    }
    return plan;
}

inline RunResult execute_run(const ExperimentSpec& spec, const PlannedRun& task) {
    EngineConfig config;
    config.problem = {spec.problem, task.n};
    config.population_size = task.population_size;
    config.scheme = task.variant.scheme;
    config.mutation = task.variant.mutation;
    config.max_generations = task.budget;
    config.seed = task.seed;
    config.tie_order = spec.tie_order;

    RunTrace trace;
    switch (task.variant.algorithm) {
        case Algorithm::Nsga2: trace = nsga2_run(config); break;
        case Algorithm::Semo: trace = semo_run(config); break;
        case Algorithm::Gsemo: trace = gsemo_run(config); break;
    }

    RunResult result;
    result.generations = trace.final_generation;
    result.evaluations = trace.evaluations;
    result.full_coverage = trace.termination == Termination::FullFrontCovered;

    const std::int64_t front_size = static_cast<std::int64_t>(task.n) + 1;
    std::ostringstream rows;
    const std::string prefix_common = std::string(to_string(spec.problem)) + "," +
                                      std::to_string(task.n) + "," +
                                      std::to_string(task.population_size) + "," +
                                      task.variant.scheme_label() + "," +
                                      to_string(task.variant.mutation) + "," +
                                      std::to_string(task.seed) + "," +
                                      std::to_string(task.run_index);

    switch (spec.kind) {
        case ExperimentKind::RuntimeCurve: {
            rows << to_string(spec.kind) << "," << prefix_common << ","
                 << trace.final_generation << "," << trace.evaluations << ","
                 << (result.full_coverage ? 1 : 0) << "\n";
            break;
        }
        case ExperimentKind::CoverageTrace:
        case ExperimentKind::VariantComparison: {
            const bool window_only = spec.kind == ExperimentKind::VariantComparison;
            for (const TraceRecord& record : trace.records) {
                const bool in_window =
                    record.generation >= task.window_lo && record.generation <= task.window_hi;
                if (window_only && !in_window)
                    continue;
                const Rational ratio(record.covered_values, front_size);
                rows << prefix_common << "," << record.generation << "," << ratio.to_string()
                     << "," << format_double(ratio.to_double()) << "\n";
                if (in_window)
                    result.window_coverage.push_back(ratio.to_double());
            }
            break;
        }
        case ExperimentKind::ExtremesDiscovery: {
            result.first_both = first_generation_both_extremes(trace);
            rows << to_string(spec.kind) << "," << prefix_common << ",";
            if (result.first_both)
                rows << *result.first_both;
            else
                rows << "none";
            rows << "\n";
            break;
        }
        case ExperimentKind::FrontSnapshot: {
            const ParetoFront front(task.n);
            result.max_gap = max_uncovered_gap(trace.final_population_objectives, front);
            for (const ObjectiveVector& v : trace.final_population_objectives)
                rows << to_string(spec.problem) << "," << task.n << "," << task.run_index << ","
                     << v.f1 << "," << v.f2 << "\n";
            break;
        }
    }
    result.raw_rows = rows.str();
    return result;
}

inline void probe_writable(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw SpecError("cannot create output directory: " + dir.string());
    const std::filesystem::path probe = dir / ".write-probe";
    {
        std::ofstream out(probe);
        if (!out)
            throw SpecError("output directory is not writable: " + dir.string());
    }
    std::filesystem::remove(probe, ec);
}

inline std::vector<RunResult> execute_all(const ExperimentSpec& spec,
                                          const std::vector<PlannedRun>& tasks, int threads) {
    std::vector<RunResult> results(tasks.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            results[i] = execute_run(spec, tasks[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size())
                        return;
                    results[i] = execute_run(spec, tasks[i]);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
                next.store(tasks.size());
            }
        });
    }
    for (std::thread& worker : workers)
        worker.join();
    for (const std::exception_ptr& error : errors)
        if (error)
            std::rethrow_exception(error);
    return results;
}

inline void write_file(const std::filesystem::path& path, const std::string& content,
                       std::vector<std::filesystem::path>& written) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw SpecError("cannot write: " + path.string());
    out << content;
    if (!out)
        throw SpecError("write failed: " + path.string());
    written.push_back(path);
}

}  // namespace detail

// Run one experiment: every (n, variant, run) cell with seeds base_seed +
// run_index, optionally on several worker threads.  Output is identical for
// any thread count because results are assembled in plan order.  Returns the
// paths written.
inline std::vector<std::filesystem::path> run_experiment(const ExperimentSpec& spec,
                                                         const std::filesystem::path& out_dir,
                                                         int threads = 1) {
    if (threads < 1)
        throw SpecError("threads must be >= 1");
    const detail::Plan plan = detail::build_plan(spec);
    detail::probe_writable(out_dir);

    const std::vector<detail::RunResult> results = detail::execute_all(spec, plan.tasks, threads);

    // Raw CSV (snapshot experiments split it into values + gaps).
    std::string raw;
    std::string gaps;
    switch (spec.kind) {
        case ExperimentKind::RuntimeCurve:
            raw = "experiment,problem,n,N,scheme,mutation,seed,run,generations,evaluations,"
                  "terminated_full_coverage\n";
            break;
        case ExperimentKind::CoverageTrace:
        case ExperimentKind::VariantComparison:
            raw = "problem,n,N,scheme,mutation,seed,run,generation,coverage_ratio,"
                  "coverage_float\n";
            break;
        case ExperimentKind::ExtremesDiscovery:
            raw = "experiment,problem,n,N,scheme,mutation,seed,run,first_both_extremes\n";
            break;
        case ExperimentKind::FrontSnapshot:
            raw = "problem,n,run,f1,f2\n";
            gaps = "run,max_uncovered_gap\n";
            break;
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
        raw += results[i].raw_rows;
        if (spec.kind == ExperimentKind::FrontSnapshot)
            gaps += std::to_string(plan.tasks[i].run_index) + "," +
                    std::to_string(results[i].max_gap) + "\n";
    }

    // Summary CSV: five-number statistics per (n, variant) cell.
    std::string summary = "experiment,problem,n,N,scheme,mutation,statistic,value\n";
    const std::size_t n_variants = plan.variants.size();
    const std::size_t runs = static_cast<std::size_t>(spec.runs);
    for (std::size_t ni = 0; ni < plan.ns.size(); ++ni) {
        for (std::size_t vi = 0; vi < n_variants; ++vi) {
            const std::size_t cell_begin = (ni * n_variants + vi) * runs;
            const detail::PlannedRun& cell_task = plan.tasks[cell_begin];
            const std::string prefix = std::string(to_string(spec.kind)) + "," +
                                       to_string(spec.problem) + "," +
                                       std::to_string(cell_task.n) + "," +
                                       std::to_string(cell_task.population_size) + "," +
                                       cell_task.variant.scheme_label() + "," +
                                       to_string(cell_task.variant.mutation) + ",";
            const auto emit = [&](const std::string& name, const SummaryStats& stats) {
                summary += prefix + name + "min," + detail::format_double(stats.min) + "\n";
                summary += prefix + name + "q1," + detail::format_double(stats.q1) + "\n";
                summary += prefix + name + "median," + detail::format_double(stats.median) + "\n";
                summary += prefix + name + "q3," + detail::format_double(stats.q3) + "\n";
                summary += prefix + name + "max," + detail::format_double(stats.max) + "\n";
            };

            std::vector<double> samples;
            switch (spec.kind) {
                case ExperimentKind::RuntimeCurve: {
                    for (std::size_t r = 0; r < runs; ++r)
                        samples.push_back(static_cast<double>(results[cell_begin + r].evaluations));
                    emit("", aggregate(samples));
                    samples.clear();
                    for (std::size_t r = 0; r < runs; ++r)
                        samples.push_back(static_cast<double>(results[cell_begin + r].generations));
                    emit("generations_", aggregate(samples));
                    std::size_t exhausted = 0;
                    for (std::size_t r = 0; r < runs; ++r)
                        if (!results[cell_begin + r].full_coverage)
                            ++exhausted;
                    summary += prefix + "budget_exhausted_runs," + std::to_string(exhausted) + "\n";
                    break;
                }
                case ExperimentKind::CoverageTrace:
                case ExperimentKind::VariantComparison: {
                    for (std::size_t r = 0; r < runs; ++r)
                        for (double c : results[cell_begin + r].window_coverage)
                            samples.push_back(c);
                    emit("", aggregate(samples));
                    break;
                }
                case ExperimentKind::ExtremesDiscovery: {
                    std::size_t found = 0;
                    for (std::size_t r = 0; r < runs; ++r) {
                        if (results[cell_begin + r].first_both) {
                            samples.push_back(
                                static_cast<double>(*results[cell_begin + r].first_both));
                            ++found;
                        }
                    }
                    if (!samples.empty())
                        emit("", aggregate(samples));
                    summary += prefix + "found_runs," + std::to_string(found) + "\n";
                    break;
                }
                case ExperimentKind::FrontSnapshot: {
                    for (std::size_t r = 0; r < runs; ++r)
                        samples.push_back(static_cast<double>(results[cell_begin + r].max_gap));
                    emit("gap_", aggregate(samples));
                    break;
                }
            }
        }
    }

    // Metadata: resolved settings and output conventions.
    std::string meta;
    meta += "experiment = " + std::string(to_string(spec.kind)) + "\n";
    meta += "problem = " + std::string(to_string(spec.problem)) + "\n";
    meta += "algorithm = " + std::string(to_string(spec.algorithm)) + "\n";
    if (spec.kind == ExperimentKind::VariantComparison) {
        meta += "scheme = all\nmutation = all\n";
    } else if (spec.algorithm == Algorithm::Nsga2) {
        meta += "scheme = " + std::string(to_string(spec.scheme)) + "\n";
        meta += "mutation = " + std::string(to_string(spec.mutation)) + "\n";
    } else {
        meta += "scheme = " + std::string(to_string(spec.algorithm)) + "\n";
        meta += "mutation = " +
                std::string(to_string(plan.variants.front().mutation)) + "\n";
    }
    meta += "n =";
    for (std::size_t ni = 0; ni < plan.ns.size(); ++ni)
        meta += std::string(ni == 0 ? " " : ",") + std::to_string(plan.ns[ni]);
    meta += "\npopulation_rule = " + plan.population_text + "\n";
    meta += "runs = " + std::to_string(spec.runs) + "\n";
    meta += "base_seed = " + std::to_string(spec.base_seed) + "\n";
    meta += "tie_order = " +
            std::string(spec.tie_order == TieOrder::Randomized ? "randomized" : "index_stable") +
            "\n";
    meta += "generator = " + std::string(RandomSource::generator_id()) + "\n";
    meta += "quartile_rule = linear interpolation between closest ranks\n";
    if (spec.kind == ExperimentKind::CoverageTrace ||
        spec.kind == ExperimentKind::VariantComparison) {
        const auto [lo, hi] = spec.window ? *spec.window : plan.window_by_n(plan.budget_by_n[0]);
        meta += "window = " + std::to_string(lo) + ".." + std::to_string(hi) + "\n";
    }
    for (std::size_t ni = 0; ni < plan.ns.size(); ++ni) {
        meta += "N." + std::to_string(plan.ns[ni]) + " = " +
                std::to_string(plan.population_by_n[ni]) + "\n";
        meta += "budget." + std::to_string(plan.ns[ni]) + " = " +
                std::to_string(plan.budget_by_n[ni]) + "\n";
    }

    std::vector<std::filesystem::path> written;
    if (spec.kind == ExperimentKind::FrontSnapshot) {
        detail::write_file(out_dir / "snapshot.csv", raw, written);
        detail::write_file(out_dir / "gaps.csv", gaps, written);
    } else {
        detail::write_file(out_dir / "raw.csv", raw, written);
    }
    detail::write_file(out_dir / "summary.csv", summary, written);
    detail::write_file(out_dir / "metadata.txt", meta, written);
    return written;
}

// The studied variant space: four parent-selection schemes times two
// mutation operators.
inline std::vector<std::string> list_variants() {
    std::vector<std::string> rows;
    for (SelectionScheme scheme :
         {SelectionScheme::EachParentOnce, SelectionScheme::UniformRandom,
          SelectionScheme::IndependentTournaments, SelectionScheme::TwoPermutationTournaments})
        for (MutationOp mutation : {MutationOp::OneBit, MutationOp::Bitwise})
            rows.push_back(std::string(to_string(scheme)) + " " + to_string(mutation));
    return rows;
}

}  // namespace moea
