#pragma once

#include <stdexcept>
#include <vector>

#include "core.hpp"

namespace moea {

enum class ProblemKind { OneMinMax, LeadingOnesTrailingZeroes };

inline const char* to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::OneMinMax: return "oneminmax";
        case ProblemKind::LeadingOnesTrailingZeroes: return "lotz";
    }
    throw std::invalid_argument("to_string: unknown ProblemKind");
}

// A benchmark instance: which function, at which bit length.
struct Problem {
    ProblemKind kind = ProblemKind::OneMinMax;
    int n = 0;
};

// Both benchmarks share the same Pareto front in objective space:
// {(k, n-k) : k = 0..n}, i.e. the points on the line f1 + f2 = n.
class ParetoFront {
public:
    explicit ParetoFront(int n) : n_(n) {
        if (n < 1)
            throw std::invalid_argument("ParetoFront: n must be positive");
    }

    int n() const { return n_; }
    std::size_t size() const { return static_cast<std::size_t>(n_) + 1; }

    bool contains(const ObjectiveVector& v) const {
        return v.f1 >= 0 && v.f2 >= 0 && v.f1 + v.f2 == n_;
    }

    // All front values, ordered by increasing f1.
    std::vector<ObjectiveVector> values() const {
        std::vector<ObjectiveVector> vals;
        vals.reserve(size());
        for (int k = 0; k <= n_; ++k)
            vals.push_back({k, n_ - k});
        return vals;
    }

private:
    int n_;
};

inline void check_problem(const Problem& problem) {
    if (problem.n < 1)
        throw std::invalid_argument("Problem: n must be positive");
}

// OneMinMax: (number of zeros, number of ones).
// LeadingOnesTrailingZeroes: (length of the 1-prefix, length of the 0-suffix).
inline ObjectiveVector evaluate(const Problem& problem, const Bitstring& x) {
    check_problem(problem);
    const std::size_t n = static_cast<std::size_t>(problem.n);
    if (x.size() != n)
        throw std::invalid_argument("evaluate: bitstring length does not match problem");
    switch (problem.kind) {
        case ProblemKind::OneMinMax: {
            const int ones = x.count_ones();
            return {problem.n - ones, ones};
        }
        case ProblemKind::LeadingOnesTrailingZeroes: {
            int lead = 0;
            while (lead < problem.n && x[static_cast<std::size_t>(lead)])
                ++lead;
            int trail = 0;
            while (trail < problem.n && !x[n - 1 - static_cast<std::size_t>(trail)])
                ++trail;
            return {lead, trail};
        }
    }
    throw std::invalid_argument("evaluate: unknown ProblemKind");
}

inline ParetoFront pareto_front(const Problem& problem) {
    check_problem(problem);
    return ParetoFront(problem.n);
}

// OneMinMax: every bitstring is Pareto-optimal.  LeadingOnesTrailingZeroes:
// exactly the strings 1^k 0^(n-k), i.e. those whose objectives sum to n.
inline bool is_pareto_optimal(const Problem& problem, const Bitstring& x) {
    const ObjectiveVector v = evaluate(problem, x);
    switch (problem.kind) {
        case ProblemKind::OneMinMax:
            return true;
        case ProblemKind::LeadingOnesTrailingZeroes:
            return v.f1 + v.f2 == problem.n;
    }
    throw std::invalid_argument("is_pareto_optimal: unknown ProblemKind");
}

}  // namespace moea
