#pragma once

#include <cstdint>
#include <string>

namespace sft {

/// Value of the symbolic metric: either exactly zero or 2^-n with n >= 0.
///
/// d(x,y) = 2^{-min{|i| : x_i != y_i}}, so distances never exceed 1 and the
/// order is total with zero() as the least element.
class DyadicDist {
public:
    static DyadicDist zero() { return DyadicDist(kZero); }
    static DyadicDist pow2(std::int64_t n); // 2^-n, n >= 0

    bool is_zero() const { return exponent_ == kZero; }

    /// n in 2^-n. Only valid for nonzero distances.
    std::int64_t exponent() const;

    bool operator==(const DyadicDist& o) const { return exponent_ == o.exponent_; }
    bool operator<(const DyadicDist& o) const;
    bool operator<=(const DyadicDist& o) const { return *this < o || *this == o; }
    bool operator>(const DyadicDist& o) const { return o < *this; }
    bool operator>=(const DyadicDist& o) const { return o <= *this; }

    std::string to_string() const; // "0" or "2^-n"

private:
    static constexpr std::int64_t kZero = -1;
    explicit DyadicDist(std::int64_t e) : exponent_(e) {}

    std::int64_t exponent_;
};

} // namespace sft
