#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "nims/error.hpp"

namespace nims {

// Exact ratio of two 64-bit integers, kept in lowest terms with a positive
// denominator. Comparisons go through 128-bit cross products.
class Rational {
  public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t value) noexcept : num_(value) {}

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) {
            fail(ErrorCode::InvalidInput, "rational with zero denominator");
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const auto g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    constexpr std::int64_t num() const noexcept { return num_; }
    constexpr std::int64_t den() const noexcept { return den_; }
    double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    friend bool operator==(const Rational &, const Rational &) = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) noexcept {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    // "p/q", or "p" when the denominator is 1.
    std::string str() const;

    // Accepts "p/q" or a plain integer.
    static Rational parse(const std::string &text);

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace nims
