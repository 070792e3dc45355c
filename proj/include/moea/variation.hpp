#pragma once

#include <stdexcept>

#include "core.hpp"
#include "random.hpp"

namespace moea {

enum class MutationOp { OneBit, Bitwise };

inline const char* to_string(MutationOp op) {
    switch (op) {
        case MutationOp::OneBit: return "one_bit";
        case MutationOp::Bitwise: return "bitwise";
    }
    throw std::invalid_argument("to_string: unknown MutationOp");
}

// Flip exactly one uniformly chosen bit.
inline Bitstring one_bit_mutation(const Bitstring& x, RandomSource& rng) {
    if (x.size() == 0)
        throw std::invalid_argument("one_bit_mutation: empty bitstring");
    Bitstring y = x;
    y.flip(static_cast<std::size_t>(rng.uniform_index(x.size())));
    return y;
}

// Flip each bit independently with probability exactly 1/n, drawn as
// uniform_index(n) == 0 so no floating-point rounding enters the law.
inline Bitstring bitwise_mutation(const Bitstring& x, RandomSource& rng) {
    const std::size_t n = x.size();
    if (n == 0)
        throw std::invalid_argument("bitwise_mutation: empty bitstring");
    Bitstring y = x;
    for (std::size_t i = 0; i < n; ++i)
        if (rng.uniform_index(n) == 0)
            y.flip(i);
    return y;
}

inline Bitstring mutate(const Bitstring& x, MutationOp op, RandomSource& rng) {
    switch (op) {
        case MutationOp::OneBit: return one_bit_mutation(x, rng);
        case MutationOp::Bitwise: return bitwise_mutation(x, rng);
    }
    throw std::invalid_argument("mutate: unknown MutationOp");
}

}  // namespace moea
