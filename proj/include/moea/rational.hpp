#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace moea {

// Exact rational number, always stored reduced with a positive denominator.
// Used wherever crowding distances and coverage ratios must compare exactly;
// the quantities involved keep numerators and denominators tiny, but cross
// products are computed in 128 bits and checked anyway.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0)
            throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // Reduced "p/q" form, e.g. "3/4", "0/1", "-2/1".
    std::string to_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const __int128 num = static_cast<__int128>(a.num_) * b.den_ +
                             static_cast<__int128>(b.num_) * a.den_;
        const __int128 den = static_cast<__int128>(a.den_) * b.den_;
        return from_wide(num, den);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        const __int128 num = static_cast<__int128>(a.num_) * b.den_ -
                             static_cast<__int128>(b.num_) * a.den_;
        const __int128 den = static_cast<__int128>(a.den_) * b.den_;
        return from_wide(num, den);
    }

    Rational& operator+=(const Rational& other) { return *this = *this + other; }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    static Rational from_wide(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const __int128 g = wide_gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr __int128 lo = INT64_MIN;
        constexpr __int128 hi = INT64_MAX;
        if (num < lo || num > hi || den > hi)
            throw std::overflow_error("Rational: value out of 64-bit range");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    static __int128 wide_gcd(__int128 a, __int128 b) {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace moea
