#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace moea {

// Deterministic randomness for engines and experiments.
//
// The engine is std::mt19937_64, which the C++ standard pins bit-for-bit, so
// seeded streams are reproducible across compilers and platforms.  The
// standard *distributions* are not pinned, so every draw algorithm on top of
// the raw 64-bit stream is spelled out here and is part of the observable
// contract:
//
//   uniform_index(b):  threshold rejection, then next_u64() % b
//   uniform_real():    top 53 bits of next_u64(), scaled by 2^-53
//   coin():            uniform_index(2) == 1
//   permutation(m):    Fisher-Yates, i = m-1..1, j = uniform_index(i+1)
//   distinct_pair(m):  first uniform over m, second uniform over the rest
//
// Identified by generator_id() in experiment metadata.  Not thread-safe; each
// concurrent run owns its own instance.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    static constexpr std::string_view generator_id() {
        return "mt19937_64/rejection-draws-v1";
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform draw from [0, bound).  Rejects the low sliver of the 64-bit
    // range so every residue is equally likely.
    std::uint64_t uniform_index(std::uint64_t bound) {
        if (bound == 0)
            throw std::invalid_argument("uniform_index: bound must be positive");
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t raw = next_u64();
            if (raw >= threshold)
                return raw % bound;
        }
    }

    // Uniform in [0, 1) on the 2^-53 grid.
    double uniform_real() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool coin() { return uniform_index(2) == 1; }

    // Uniform random permutation of {0, ..., m-1}.
    std::vector<std::size_t> permutation(std::size_t m) {
        std::vector<std::size_t> perm(m);
        for (std::size_t i = 0; i < m; ++i)
            perm[i] = i;
        for (std::size_t i = m; i > 1; --i) {
            const std::size_t j =
                static_cast<std::size_t>(uniform_index(static_cast<std::uint64_t>(i)));
            std::swap(perm[i - 1], perm[j]);
        }
        return perm;
    }

    // Two distinct indices from {0, ..., m-1}: the first uniform over all m,
    // the second uniform over the remaining m-1.
    std::pair<std::size_t, std::size_t> distinct_pair(std::size_t m) {
        if (m < 2)
            throw std::invalid_argument("distinct_pair: need at least two elements");
        const std::size_t first =
            static_cast<std::size_t>(uniform_index(static_cast<std::uint64_t>(m)));
        std::size_t second =
            static_cast<std::size_t>(uniform_index(static_cast<std::uint64_t>(m - 1)));
        if (second >= first)
            ++second;
        return {first, second};
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace moea
