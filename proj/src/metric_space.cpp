#include "sft/metric_space.hpp"

#include <algorithm>
#include <numeric>

#include "sft/errors.hpp"

namespace sft {

namespace {

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

BigRat reciprocal(const BigRat& r) {
    if (r.is_zero()) throw PreconditionError("reciprocal of zero");
    return BigRat(r.den(), r.num());
}

} // namespace

FiniteMetricSpace FiniteMetricSpace::make(std::vector<std::vector<BigRat>> table) {
    FiniteMetricSpace s;
    s.n_ = static_cast<std::uint32_t>(table.size());
    if (s.n_ == 0) throw PreconditionError("metric space needs at least one point");
    for (const auto& row : table)
        if (row.size() != s.n_) throw PreconditionError("metric table must be square");

    BigRat diam = BigRat::zero();
    for (std::uint32_t i = 0; i < s.n_; ++i) {
        if (!table[i][i].is_zero()) throw PreconditionError("metric: d(x,x) must be zero");
        for (std::uint32_t j = 0; j < s.n_; ++j) {
            if (i != j && table[i][j].is_zero())
                throw PreconditionError("metric: distinct points at distance zero");
            if (!(table[i][j] == table[j][i]))
                throw PreconditionError("metric: table must be symmetric");
            diam = BigRat::max(diam, table[i][j]);
        }
    }
    for (std::uint32_t i = 0; i < s.n_; ++i)
        for (std::uint32_t j = 0; j < s.n_; ++j)
            for (std::uint32_t k = 0; k < s.n_; ++k)
                if (table[i][k] + table[k][j] < table[i][j])
                    throw PreconditionError("metric: triangle inequality fails");

    s.original_diameter_ = diam;
    s.rescaled_ = BigRat::one() < diam;
    s.table_.reserve(static_cast<std::size_t>(s.n_) * s.n_);
    const BigRat scale = s.rescaled_ ? reciprocal(diam) : BigRat::one();
    for (std::uint32_t i = 0; i < s.n_; ++i)
        for (std::uint32_t j = 0; j < s.n_; ++j)
            s.table_.push_back(s.rescaled_ ? table[i][j] * scale : table[i][j]);
    return s;
}

WeightedDist metric_D(const FiniteMetricSpace& space, const EpBiSeq& x, const EpBiSeq& y) {
    if (x.alphabet_size() != space.size() || y.alphabet_size() != space.size())
        throw AlphabetMismatchError("metric_D: points not over this space");
    if (x == y) return BigRat::zero();

    const auto lcm_left = lcm64(static_cast<std::int64_t>(x.left_period().size()),
                                static_cast<std::int64_t>(y.left_period().size()));
    const auto lcm_right = lcm64(static_cast<std::int64_t>(x.right_period().size()),
                                 static_cast<std::int64_t>(y.right_period().size()));
    // weights decay away from 0, so one full joint period inside each pure
    // tail zone dominates everything farther out
    const std::int64_t lo = std::min<std::int64_t>({x.anchor(), y.anchor(), 0}) - lcm_left;
    const std::int64_t hi = std::max<std::int64_t>({x.center_end(), y.center_end(), 0}) + lcm_right;

    BigRat best = BigRat::zero();
    for (std::int64_t j = lo; j <= hi; ++j) {
        const BigRat& d = space.dist(x.at(j), y.at(j));
        if (d.is_zero()) continue;
        BigRat term = d.scaled_down_pow2(static_cast<std::uint64_t>(std::llabs(j)));
        best = BigRat::max(best, term);
    }
    return best;
}

EpBiSeq diagonal_shadow(const TsLimitPseudoOrbit& t) {
    const EpBiSeq& a = t.left();
    const EpBiSeq& b = t.right();
    const std::int64_t m = t.cut();
    auto sample = [&](std::int64_t j) -> Symbol {
        if (j <= -m) return a.at(j);
        if (j >= m) return b.at(j);
        return t.middle()[static_cast<std::size_t>(j + m - 1)].at(0);
    };
    return EpBiSeq::from_samples(a.alphabet_size(), sample, std::min(-m, a.anchor()),
                                 static_cast<std::uint32_t>(a.left_period().size()),
                                 std::max(m, b.center_end()),
                                 static_cast<std::uint32_t>(b.right_period().size()));
}

DecayCheck verify_decay(const FiniteMetricSpace& space, const TsLimitPseudoOrbit& t,
                        const EpBiSeq& x, std::int64_t p) {
    if (p < 1) throw PreconditionError("verify_decay: p must be >= 1");
    const std::int64_t m = t.cut();
    DecayCheck check;

    // step errors vanish outside [-m, m-1]: the tails are genuine orbits
    const BigRat step_bound = BigRat::pow2_inv(static_cast<std::uint64_t>(p + 1));
    std::int64_t step_cutoff = 0;
    for (std::int64_t i = -m; i < m; ++i) {
        WeightedDist err = metric_D(space, t.point(i).shifted(1), t.point(i + 1));
        if (step_bound < err) step_cutoff = std::max<std::int64_t>(step_cutoff, std::llabs(i) + 1);
    }
    // past the step cutoff, chained triangle estimates bound the same-side
    // terms by 2^-p; terms reaching across the middle carry weight at most
    // 2^-(|m| - step_cutoff), so adding p covers them too
    check.n_p = step_cutoff == 0 ? 0 : step_cutoff + p;

    // horizon: past it every compared pair sits in matching periodic zones
    // (one joint period scanned) and historic terms weigh below 2^-(p+1)
    const EpBiSeq& a = t.left();
    const EpBiSeq& b = t.right();
    const std::int64_t c_right = std::max({x.center_end(), b.center_end(), std::int64_t(0)});
    const std::int64_t c_left = std::min({x.anchor(), a.anchor(), std::int64_t(0)});
    const std::int64_t lcm_right = lcm64(static_cast<std::int64_t>(x.right_period().size()),
                                         static_cast<std::int64_t>(b.right_period().size()));
    const std::int64_t lcm_left = lcm64(static_cast<std::int64_t>(x.left_period().size()),
                                        static_cast<std::int64_t>(a.left_period().size()));
    const std::int64_t h_right = std::max({check.n_p, m, c_right + p + 1}) + lcm_right;
    const std::int64_t h_left = std::max({check.n_p, m, p + 1 - c_left}) + lcm_left;
    check.checked_up_to = std::max(h_right, h_left);

    const BigRat bound = BigRat::pow2_inv(static_cast<std::uint64_t>(p));
    check.ok = true;
    std::int64_t worst_violation = -1;
    auto probe = [&](std::int64_t mm) {
        WeightedDist d = metric_D(space, x.shifted(mm), t.point(mm));
        if (bound < d) {
            worst_violation = std::max<std::int64_t>(worst_violation, std::llabs(mm));
            if (std::llabs(mm) >= check.n_p && check.ok) {
                check.ok = false;
                check.violating_m = mm;
            }
        }
    };
    for (std::int64_t mm = 0; mm <= h_right; ++mm) probe(mm);
    for (std::int64_t mm = -1; mm >= -h_left; --mm) probe(mm);
    check.minimal_n_p = worst_violation + 1;
    return check;
}

} // namespace sft
