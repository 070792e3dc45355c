#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "random.hpp"

namespace moea {

// Fixed-length binary genome.  Length is set at construction and never
// changes; bits are 0/1.
class Bitstring {
public:
    explicit Bitstring(std::size_t n) : bits_(n, 0) {}

    static Bitstring uniform(std::size_t n, RandomSource& rng) {
        Bitstring x(n);
        for (std::size_t i = 0; i < n; ++i)
            x.bits_[i] = static_cast<std::uint8_t>(rng.coin());
        return x;
    }

    static Bitstring from_string(std::string_view s) {
        Bitstring x(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != '0' && s[i] != '1')
                throw std::invalid_argument("Bitstring::from_string: expected only 0/1");
            x.bits_[i] = static_cast<std::uint8_t>(s[i] - '0');
        }
        return x;
    }

    std::size_t size() const { return bits_.size(); }

    bool operator[](std::size_t i) const { return bits_[i] != 0; }

    void set(std::size_t i, bool value) { bits_[i] = static_cast<std::uint8_t>(value); }

    void flip(std::size_t i) { bits_[i] ^= 1u; }

    int count_ones() const {
        return std::accumulate(bits_.begin(), bits_.end(), 0,
                               [](int acc, std::uint8_t b) { return acc + b; });
    }

    std::string to_string() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i)
            s[i] = static_cast<char>('0' + bits_[i]);
        return s;
    }

    friend bool operator==(const Bitstring&, const Bitstring&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

// A point in the bi-objective space.  Both objectives are maximized.
struct ObjectiveVector {
    int f1 = 0;
    int f2 = 0;

    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

// a weakly dominates b: a is at least as good in every objective.
inline bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    return a.f1 >= b.f1 && a.f2 >= b.f2;
}

// a strictly dominates b: weak dominance plus inequality somewhere.
inline bool strictly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    return weakly_dominates(a, b) && !(a == b);
}

}  // namespace moea
