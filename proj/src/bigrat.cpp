#include "sft/bigrat.hpp"

#include <algorithm>
#include <cmath>

#include "sft/errors.hpp"

namespace sft {

// ---------------------------------------------------------------- BigUint

BigUint::BigUint(std::uint64_t v) {
    if (v != 0) limbs_.push_back(v);
}

BigUint BigUint::pow2(std::uint64_t k) {
    BigUint r;
    r.add_pow2(k);
    return r;
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint64_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 64;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

BigUint& BigUint::operator+=(const BigUint& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 s = carry + limbs_[i];
        if (i < o.limbs_.size()) s += o.limbs_[i];
        limbs_[i] = static_cast<std::uint64_t>(s);
        carry = s >> 64;
    }
    if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
    if (compare(*this, o) < 0) throw PreconditionError("BigUint underflow");
    unsigned __int128 borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 sub = borrow;
        if (i < o.limbs_.size()) sub += o.limbs_[i];
        if (limbs_[i] >= sub) {
            limbs_[i] = static_cast<std::uint64_t>(limbs_[i] - sub);
            borrow = 0;
        } else {
            unsigned __int128 base = static_cast<unsigned __int128>(1) << 64;
            limbs_[i] = static_cast<std::uint64_t>(base + limbs_[i] - sub);
            borrow = 1;
        }
    }
    trim();
    return *this;
}

BigUint& BigUint::add_pow2(std::uint64_t k) {
    std::size_t limb = k / 64;
    std::uint64_t bit = k % 64;
    if (limbs_.size() <= limb) limbs_.resize(limb + 1, 0);
    unsigned __int128 s = static_cast<unsigned __int128>(limbs_[limb]) + (std::uint64_t(1) << bit);
    limbs_[limb] = static_cast<std::uint64_t>(s);
    std::uint64_t carry = static_cast<std::uint64_t>(s >> 64);
    for (std::size_t i = limb + 1; carry && i <= limbs_.size(); ++i) {
        if (i == limbs_.size()) {
            limbs_.push_back(carry);
            carry = 0;
        } else {
            unsigned __int128 t = static_cast<unsigned __int128>(limbs_[i]) + carry;
            limbs_[i] = static_cast<std::uint64_t>(t);
            carry = static_cast<std::uint64_t>(t >> 64);
        }
    }
    return *this;
}

BigUint& BigUint::operator<<=(std::uint64_t bits) {
    if (is_zero() || bits == 0) return *this;
    std::size_t words = bits / 64;
    std::uint64_t rem = bits % 64;
    std::vector<std::uint64_t> out(limbs_.size() + words + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        out[i + words] |= limbs_[i] << rem;
        if (rem) out[i + words + 1] |= limbs_[i] >> (64 - rem);
    }
    limbs_ = std::move(out);
    trim();
    return *this;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    BigUint r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            unsigned __int128 cur = static_cast<unsigned __int128>(a.limbs_[i]) * b.limbs_[j] +
                                    r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<std::uint64_t>(cur);
            carry = static_cast<std::uint64_t>(cur >> 64);
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            unsigned __int128 cur = static_cast<unsigned __int128>(r.limbs_[k]) + carry;
            r.limbs_[k] = static_cast<std::uint64_t>(cur);
            carry = static_cast<std::uint64_t>(cur >> 64);
            ++k;
        }
    }
    r.trim();
    return r;
}

BigUint& BigUint::mul_small(std::uint64_t v) {
    if (v == 0 || is_zero()) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        unsigned __int128 cur = static_cast<unsigned __int128>(limb) * v + carry;
        limb = static_cast<std::uint64_t>(cur);
        carry = static_cast<std::uint64_t>(cur >> 64);
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

std::uint64_t BigUint::divmod_small(std::uint64_t d) {
    if (d == 0) throw PreconditionError("division by zero");
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | limbs_[i];
        limbs_[i] = static_cast<std::uint64_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint64_t>(rem);
}

std::uint64_t BigUint::strip_twos() {
    if (is_zero()) return 0;
    std::uint64_t words = 0;
    while (limbs_[words] == 0) ++words;
    std::uint64_t bits = 0;
    std::uint64_t limb = limbs_[words];
    while (!(limb & 1)) {
        ++bits;
        limb >>= 1;
    }
    std::uint64_t total = words * 64 + bits;
    if (total == 0) return 0;
    // shift right by total
    std::size_t n = limbs_.size();
    for (std::size_t i = 0; i + words < n; ++i) {
        std::uint64_t lo = limbs_[i + words] >> bits;
        std::uint64_t hi = (bits && i + words + 1 < n) ? (limbs_[i + words + 1] << (64 - bits)) : 0;
        limbs_[i] = lo | hi;
    }
    limbs_.resize(n - words);
    trim();
    return total;
}

int BigUint::compare(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::string BigUint::to_decimal() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        std::uint64_t r = tmp.divmod_small(1000000000000000000ull);
        std::string chunk = std::to_string(r);
        if (tmp.is_zero()) {
            out.insert(0, chunk);
        } else {
            out.insert(0, std::string(18 - chunk.size(), '0') + chunk);
        }
    }
    return out;
}

double BigUint::to_double() const {
    double r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) r = r * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
    return r;
}

// ----------------------------------------------------------------- BigRat

BigRat::BigRat(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    normalize_twos();
}

BigRat::BigRat(BigUint num, BigUint den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw PreconditionError("rational with zero denominator");
    normalize_twos();
}

void BigRat::normalize_twos() {
    if (num_.is_zero()) {
        den_ = BigUint(1);
        return;
    }
    // strip common powers of two only; full gcd is never needed for
    // comparisons, which cross-multiply
    BigUint n = num_, d = den_;
    std::uint64_t tn = n.strip_twos();
    std::uint64_t td = d.strip_twos();
    std::uint64_t common = std::min(tn, td);
    if (common > 0) {
        n <<= (tn - common);
        d <<= (td - common);
        num_ = std::move(n);
        den_ = std::move(d);
    }
}

BigRat BigRat::pow2_inv(std::uint64_t k) { return BigRat(BigUint(1), BigUint::pow2(k)); }

BigRat BigRat::from_dyadic(const DyadicDist& d) {
    if (d.is_zero()) return BigRat::zero();
    return pow2_inv(static_cast<std::uint64_t>(d.exponent()));
}

BigRat operator+(const BigRat& a, const BigRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return BigRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BigRat operator*(const BigRat& a, const BigRat& b) {
    if (a.is_zero() || b.is_zero()) return BigRat::zero();
    return BigRat(a.num_ * b.num_, a.den_ * b.den_);
}

BigRat BigRat::scaled_down_pow2(std::uint64_t k) const {
    if (is_zero()) return *this;
    BigUint d = den_;
    d <<= k;
    return BigRat(num_, std::move(d));
}

BigRat BigRat::divided_by(std::uint64_t d) const {
    if (d == 0) throw PreconditionError("division by zero");
    if (is_zero()) return *this;
    BigUint den = den_;
    den.mul_small(d);
    return BigRat(num_, std::move(den));
}

int BigRat::compare(const BigRat& a, const BigRat& b) {
    return BigUint::compare(a.num_ * b.den_, b.num_ * a.den_);
}

std::string BigRat::to_string() const {
    if (den_ == BigUint(1)) return num_.to_decimal();
    return num_.to_decimal() + "/" + den_.to_decimal();
}

double BigRat::to_double() const {
    if (is_zero()) return 0.0;
    // scale so both parts fit a double's range
    double n = num_.to_double();
    double d = den_.to_double();
    if (std::isfinite(n) && std::isfinite(d) && d != 0) return n / d;
    auto nb = static_cast<long long>(num_.bit_length());
    auto db = static_cast<long long>(den_.bit_length());
    return std::exp2(static_cast<double>(nb - db));
}

// -------------------------------------------------------------- DyadicSum

void DyadicSum::add(const DyadicDist& d) {
    if (d.is_zero()) return;
    std::uint64_t e = static_cast<std::uint64_t>(d.exponent());
    if (e > exp_) {
        mant_ <<= (e - exp_);
        exp_ = e;
    }
    mant_.add_pow2(exp_ - e);
}

BigRat DyadicSum::averaged_over(std::uint64_t n) const {
    BigUint den = BigUint::pow2(exp_);
    den.mul_small(n);
    return BigRat(mant_, std::move(den));
}

BigRat DyadicSum::value() const { return BigRat(mant_, BigUint::pow2(exp_)); }

} // namespace sft
