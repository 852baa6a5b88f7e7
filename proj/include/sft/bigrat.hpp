#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sft/dyadic.hpp"

namespace sft {

/// Arbitrary-precision unsigned integer, little-endian 64-bit limbs.
/// Just enough for exact rational bookkeeping: add, subtract (a >= b),
/// multiply, shifts, small division for decimal printing.
class BigUint {
public:
    BigUint() = default;
    explicit BigUint(std::uint64_t v);

    static BigUint pow2(std::uint64_t k);

    bool is_zero() const { return limbs_.empty(); }
    std::size_t bit_length() const;

    BigUint& operator+=(const BigUint& o);
    BigUint& operator-=(const BigUint& o); // requires *this >= o
    BigUint& add_pow2(std::uint64_t k);    // += 2^k
    BigUint& operator<<=(std::uint64_t bits);

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
    friend BigUint operator*(const BigUint& a, const BigUint& b);

    BigUint& mul_small(std::uint64_t v);
    /// Divides in place by small d, returns the remainder.
    std::uint64_t divmod_small(std::uint64_t d);

    /// Strips factors of two; returns how many were removed.
    std::uint64_t strip_twos();

    static int compare(const BigUint& a, const BigUint& b);
    bool operator==(const BigUint& o) const { return compare(*this, o) == 0; }
    bool operator<(const BigUint& o) const { return compare(*this, o) < 0; }
    bool operator<=(const BigUint& o) const { return compare(*this, o) <= 0; }
    bool operator>(const BigUint& o) const { return compare(*this, o) > 0; }
    bool operator>=(const BigUint& o) const { return compare(*this, o) >= 0; }

    std::string to_decimal() const;
    double to_double() const;

private:
    void trim();
    std::vector<std::uint64_t> limbs_; // empty means zero
};

/// Exact nonnegative rational backed by BigUint.
///
/// Kept only lightly normalized (powers of two stripped); comparisons use
/// cross-multiplication, so exactness never depends on reduction.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(std::uint64_t num, std::uint64_t den);
    BigRat(BigUint num, BigUint den);

    static BigRat zero() { return BigRat(); }
    static BigRat one() { return BigRat(1, 1); }
    /// 2^-k.
    static BigRat pow2_inv(std::uint64_t k);
    static BigRat from_dyadic(const DyadicDist& d);

    bool is_zero() const { return num_.is_zero(); }

    const BigUint& num() const { return num_; }
    const BigUint& den() const { return den_; }

    friend BigRat operator+(const BigRat& a, const BigRat& b);
    friend BigRat operator*(const BigRat& a, const BigRat& b);
    /// Divide by 2^k.
    BigRat scaled_down_pow2(std::uint64_t k) const;
    /// Divide by a small positive integer.
    BigRat divided_by(std::uint64_t d) const;

    static int compare(const BigRat& a, const BigRat& b);
    bool operator==(const BigRat& o) const { return compare(*this, o) == 0; }
    bool operator<(const BigRat& o) const { return compare(*this, o) < 0; }
    bool operator<=(const BigRat& o) const { return compare(*this, o) <= 0; }
    bool operator>(const BigRat& o) const { return compare(*this, o) > 0; }
    bool operator>=(const BigRat& o) const { return compare(*this, o) >= 0; }

    static const BigRat& max(const BigRat& a, const BigRat& b) { return a < b ? b : a; }

    std::string to_string() const; // "p/q" (q omitted when 1)
    double to_double() const;

private:
    void normalize_twos();
    BigUint num_, den_; // den_ > 0
};

/// Exact accumulator for sums of dyadic distances: value = mantissa / 2^exp.
class DyadicSum {
public:
    DyadicSum() : mant_(0), exp_(0) {}

    void add(const DyadicDist& d);
    bool is_zero() const { return mant_.is_zero(); }

    /// The sum divided by a positive integer, as an exact rational.
    BigRat averaged_over(std::uint64_t n) const;
    BigRat value() const;

private:
    BigUint mant_;
    std::uint64_t exp_;
};

} // namespace sft
