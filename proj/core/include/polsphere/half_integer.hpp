#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace polsphere {

// Exact half-integer arithmetic for spin quantum numbers.  The value is
// stored as twice itself, so S = 3/2 is twice_value() == 3 and no floating
// point ever enters comparisons or selection-rule checks.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    constexpr explicit HalfInteger(int twice) : twice_(twice) {}

    static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }
    static constexpr HalfInteger from_int(int n) { return HalfInteger(2 * n); }

    constexpr int twice_value() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double value() const { return 0.5 * twice_; }

    // Only valid when is_integer(); guarded to catch misuse early.
    constexpr int as_int() const {
        if (twice_ % 2 != 0)
            throw std::logic_error("HalfInteger::as_int on half-odd value");
        return twice_ / 2;
    }

    std::string str() const {
        if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
        return HalfInteger(a.twice_ + b.twice_);
    }
    friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
        return HalfInteger(a.twice_ - b.twice_);
    }
    constexpr HalfInteger operator-() const { return HalfInteger(-twice_); }

    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

private:
    int twice_ = 0;
};

inline constexpr HalfInteger abs(HalfInteger h) {
    return HalfInteger(h.twice_value() < 0 ? -h.twice_value() : h.twice_value());
}

} // namespace polsphere
