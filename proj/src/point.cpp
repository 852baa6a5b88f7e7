#include "sft/point.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sft/errors.hpp"

namespace sft {

namespace {

// Length of the primitive root of w (failure-function period detection).
std::size_t primitive_period(const std::vector<Symbol>& w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> fail(n + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i) {
        while (k > 0 && w[i] != w[k]) k = fail[k];
        if (w[i] == w[k]) ++k;
        fail[i + 1] = k;
    }
    std::size_t p = n - fail[n];
    return (n % p == 0) ? p : n;
}

std::int64_t pos_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

} // namespace

Symbol EpBiSeq::at(std::int64_t i) const {
    if (i >= center_end()) {
        return right_[static_cast<std::size_t>(pos_mod(i - center_end(), static_cast<std::int64_t>(right_.size())))];
    }
    if (i >= anchor_) {
        return center_[static_cast<std::size_t>(i - anchor_)];
    }
    const auto p = static_cast<std::int64_t>(left_.size());
    std::int64_t back = pos_mod(anchor_ - 1 - i, p);
    return left_[static_cast<std::size_t>(p - 1 - back)];
}

namespace {

// Value the left tiling of (word, anchor) would take at i, extended to all of Z.
Symbol left_ext(const std::vector<Symbol>& word, std::int64_t anchor, std::int64_t i) {
    const auto p = static_cast<std::int64_t>(word.size());
    std::int64_t back = pos_mod(anchor - 1 - i, p);
    return word[static_cast<std::size_t>(p - 1 - back)];
}

// Value the right tiling of (word, begin) would take at i, extended to all of Z.
Symbol right_ext(const std::vector<Symbol>& word, std::int64_t begin, std::int64_t i) {
    const auto p = static_cast<std::int64_t>(word.size());
    return word[static_cast<std::size_t>(pos_mod(i - begin, p))];
}

} // namespace

void EpBiSeq::canonicalize() {
    left_.resize(primitive_period(left_));
    right_.resize(primitive_period(right_));
    const auto pl = static_cast<std::int64_t>(left_.size());
    const auto pr = static_cast<std::int64_t>(right_.size());
    const std::int64_t e = center_end();

    // A fully periodic sequence forces equal primitive tail periods; detect it
    // on a window covering the center and both seams, then re-anchor at 0.
    if (pl == pr) {
        bool periodic = true;
        for (std::int64_t i = anchor_ - pl - 2; i <= e + 2 && periodic; ++i) {
            if (at(i) != at(i + pl)) periodic = false;
        }
        if (periodic) {
            std::vector<Symbol> w;
            w.reserve(static_cast<std::size_t>(pl));
            for (std::int64_t i = 0; i < pl; ++i) w.push_back(at(i));
            left_ = w;
            center_.clear();
            right_ = std::move(w);
            anchor_ = 0;
            return;
        }
    }

    // Minimal start of the right tiling and maximal end of the left tiling.
    const std::int64_t cap = static_cast<std::int64_t>(center_.size()) + 2 * (pl + pr) + 16;
    std::int64_t estar = e;
    while (e - estar < cap && at(estar - 1) == right_ext(right_, e, estar - 1)) --estar;
    std::int64_t bstar = anchor_ - 1;
    while (bstar - (anchor_ - 1) < cap && at(bstar + 1) == left_ext(left_, anchor_, bstar + 1)) ++bstar;
    if (e - estar >= cap || bstar - (anchor_ - 1) >= cap)
        throw std::logic_error("canonicalize: tail overlap exceeded bound on a non-periodic sequence");

    const std::int64_t s = std::min(bstar + 1, estar);
    std::vector<Symbol> nl, nc, nr;
    nl.reserve(static_cast<std::size_t>(pl));
    for (std::int64_t i = s - pl; i < s; ++i) nl.push_back(at(i));
    nc.reserve(static_cast<std::size_t>(estar - s));
    for (std::int64_t i = s; i < estar; ++i) nc.push_back(at(i));
    nr.reserve(static_cast<std::size_t>(pr));
    for (std::int64_t i = estar; i < estar + pr; ++i) nr.push_back(at(i));
    left_ = std::move(nl);
    center_ = std::move(nc);
    right_ = std::move(nr);
    anchor_ = s;
}

EpBiSeq EpBiSeq::make(std::uint32_t alphabet_size,
                      std::vector<Symbol> left_period,
                      std::vector<Symbol> center,
                      std::vector<Symbol> right_period,
                      std::int64_t anchor) {
    if (left_period.empty() || right_period.empty())
        throw PreconditionError("period words must be nonempty");
    auto check = [&](const std::vector<Symbol>& w) {
        for (Symbol s : w)
            if (s.id >= alphabet_size) throw PreconditionError("symbol id beyond alphabet size");
    };
    check(left_period);
    check(center);
    check(right_period);
    EpBiSeq p;
    p.alphabet_size_ = alphabet_size;
    p.left_ = std::move(left_period);
    p.center_ = std::move(center);
    p.right_ = std::move(right_period);
    p.anchor_ = anchor;
    p.canonicalize();
    return p;
}

EpBiSeq EpBiSeq::constant(std::uint32_t alphabet_size, Symbol s) {
    return make(alphabet_size, {s}, {}, {s}, 0);
}

EpBiSeq EpBiSeq::periodic(std::uint32_t alphabet_size, std::vector<Symbol> word, std::int64_t phase) {
    auto copy = word;
    return make(alphabet_size, std::move(copy), {}, std::move(word), phase);
}

EpBiSeq EpBiSeq::from_samples(std::uint32_t alphabet_size,
                              const std::function<Symbol(std::int64_t)>& sample,
                              std::int64_t left_end,
                              std::uint32_t left_period,
                              std::int64_t right_begin,
                              std::uint32_t right_period) {
    if (left_period == 0 || right_period == 0)
        throw PreconditionError("tail periods must be positive");
    if (left_end > right_begin)
        throw PreconditionError("from_samples needs left_end <= right_begin");
    std::vector<Symbol> l, c, r;
    for (std::int64_t i = left_end - left_period; i < left_end; ++i) l.push_back(sample(i));
    for (std::int64_t i = left_end; i < right_begin; ++i) c.push_back(sample(i));
    for (std::int64_t i = right_begin; i < right_begin + right_period; ++i) r.push_back(sample(i));
    return make(alphabet_size, std::move(l), std::move(c), std::move(r), left_end);
}

bool EpBiSeq::is_periodic() const {
    return center_.empty() && left_ == right_ && anchor_ == 0;
}

EpBiSeq EpBiSeq::shifted(std::int64_t k) const {
    EpBiSeq y = *this;
    if (k == 0) return y;
    if (is_periodic()) {
        const auto p = static_cast<std::int64_t>(right_.size());
        std::vector<Symbol> w;
        w.reserve(right_.size());
        for (std::int64_t i = 0; i < p; ++i) w.push_back(at(pos_mod(i + k, p)));
        y.left_ = w;
        y.right_ = std::move(w);
        return y;
    }
    y.anchor_ -= k;
    return y;
}

std::size_t EpBiSeq::hash() const {
    std::size_t h = std::hash<std::int64_t>()(anchor_) * 1000003u + alphabet_size_;
    auto mix = [&h](const std::vector<Symbol>& w) {
        h = h * 16777619u + w.size();
        for (Symbol s : w) h = h * 31u + s.id;
    };
    mix(left_);
    mix(center_);
    mix(right_);
    return h;
}

namespace {

struct ScanWindow {
    std::int64_t lo, hi; // disagreement, if any, lies in [lo, hi]
    std::int64_t right_zone; // both sequences purely right-periodic at >= right_zone
    std::int64_t left_zone;  // both purely left-periodic at < left_zone
};

ScanWindow scan_window(const EpBiSeq& x, const EpBiSeq& y) {
    const auto plx = static_cast<std::int64_t>(x.left_period().size());
    const auto ply = static_cast<std::int64_t>(y.left_period().size());
    const auto prx = static_cast<std::int64_t>(x.right_period().size());
    const auto pry = static_cast<std::int64_t>(y.right_period().size());
    ScanWindow w;
    w.left_zone = std::min(x.anchor(), y.anchor());
    w.right_zone = std::max(x.center_end(), y.center_end());
    w.lo = w.left_zone - lcm64(plx, ply);
    w.hi = w.right_zone + lcm64(prx, pry) - 1;
    return w;
}

} // namespace

DyadicDist dist(const EpBiSeq& x, const EpBiSeq& y) {
    if (x.alphabet_size() != y.alphabet_size())
        throw AlphabetMismatchError("dist: points over different alphabets");
    if (x == y) return DyadicDist::zero();
    ScanWindow w = scan_window(x, y);
    std::int64_t bound = std::max(std::llabs(w.lo), std::llabs(w.hi));
    for (std::int64_t i = 0; i <= bound; ++i) {
        if (x.at(i) != y.at(i) || x.at(-i) != y.at(-i)) return DyadicDist::pow2(i);
    }
    throw std::logic_error("dist: distinct canonical sequences with no disagreement in window");
}

std::optional<SyncWitness> tail_sync(const EpBiSeq& x, const EpBiSeq& y, Direction dir) {
    if (x.alphabet_size() != y.alphabet_size())
        throw AlphabetMismatchError("tail_sync: points over different alphabets");
    if (x == y) return SyncWitness{dir, 0};
    ScanWindow w = scan_window(x, y);
    if (dir == Direction::Forward) {
        for (std::int64_t i = w.right_zone; i <= w.hi; ++i)
            if (x.at(i) != y.at(i)) return std::nullopt;
        // tails coincide; the last disagreement exists and lies below right_zone
        for (std::int64_t i = w.right_zone - 1; i >= w.lo; --i)
            if (x.at(i) != y.at(i)) return SyncWitness{dir, i + 1};
        throw std::logic_error("tail_sync: distinct sequences fully agree in window");
    }
    for (std::int64_t i = w.lo; i < w.left_zone; ++i)
        if (x.at(i) != y.at(i)) return std::nullopt;
    for (std::int64_t i = w.left_zone; i <= w.hi; ++i)
        if (x.at(i) != y.at(i)) return SyncWitness{dir, 1 - i};
    throw std::logic_error("tail_sync: distinct sequences fully agree in window");
}

} // namespace sft
