#include <doctest.h>

#include <random>
#include <vector>

#include "sft/errors.hpp"
#include "sft/metric_space.hpp"
#include "sft/sampling.hpp"

using namespace sft;

namespace {

Symbol S(std::uint32_t id) { return Symbol{id}; }

FiniteMetricSpace two_point(std::uint64_t num, std::uint64_t den) {
    std::vector<std::vector<BigRat>> table{{BigRat::zero(), BigRat(num, den)},
                                           {BigRat(num, den), BigRat::zero()}};
    return FiniteMetricSpace::make(std::move(table));
}

} // namespace

TEST_CASE("metric space validation and rescaling") {
    CHECK_NOTHROW((void)two_point(1, 1));
    CHECK_NOTHROW((void)two_point(1, 4));

    // diameter 3 is rescaled to 1
    FiniteMetricSpace wide = two_point(3, 1);
    CHECK(wide.rescaled());
    CHECK(wide.dist(0u, 1u) == BigRat::one());
    CHECK(wide.original_diameter() == BigRat(3, 1));

    std::vector<std::vector<BigRat>> asym{{BigRat::zero(), BigRat(1, 2)},
                                          {BigRat(1, 3), BigRat::zero()}};
    CHECK_THROWS_AS((void)FiniteMetricSpace::make(std::move(asym)), PreconditionError);

    std::vector<std::vector<BigRat>> bad_triangle{
        {BigRat::zero(), BigRat(1, 1), BigRat(1, 3)},
        {BigRat(1, 1), BigRat::zero(), BigRat(1, 3)},
        {BigRat(1, 3), BigRat(1, 3), BigRat::zero()}};
    CHECK_THROWS_AS((void)FiniteMetricSpace::make(std::move(bad_triangle)), PreconditionError);
}

TEST_CASE("metric_D on simple pairs") {
    FiniteMetricSpace sp = two_point(1, 4);
    EpBiSeq x = EpBiSeq::constant(2, S(0));
    CHECK(metric_D(sp, x, x).is_zero());

    // y differs only at coordinate 3 where d = 1/4: D = (1/4)/8
    EpBiSeq y = EpBiSeq::make(2, {S(0)}, {S(1)}, {S(0)}, 3);
    CHECK(metric_D(sp, x, y) == BigRat(1, 32));
}

TEST_CASE("metric_D equals a widened brute scan") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        FiniteMetricSpace sp = sampling::random_metric_space(4, rng);
        TsLimitPseudoOrbit t = sampling::random_full_shift_pseudo_orbit(4, rng);
        EpBiSeq x = t.point(-2);
        EpBiSeq y = t.point(2);
        WeightedDist fast = metric_D(sp, x, y);
        // brute: scan far beyond where any term could still beat the max
        BigRat brute = BigRat::zero();
        for (std::int64_t j = -64; j <= 64; ++j) {
            BigRat term = sp.dist(x.at(j), y.at(j))
                              .scaled_down_pow2(static_cast<std::uint64_t>(std::llabs(j)));
            brute = BigRat::max(brute, term);
        }
        CHECK(fast == brute);
    }
}

TEST_CASE("metric_D is a metric") {
    std::mt19937_64 rng(18);
    FiniteMetricSpace sp = sampling::random_metric_space(5, rng);
    for (int trial = 0; trial < 60; ++trial) {
        TsLimitPseudoOrbit t = sampling::random_full_shift_pseudo_orbit(5, rng);
        EpBiSeq x = t.point(-1), y = t.point(0), z = t.point(1);
        CHECK(metric_D(sp, x, y) == metric_D(sp, y, x));
        CHECK(metric_D(sp, x, z) <= metric_D(sp, x, y) + metric_D(sp, y, z));
        CHECK(metric_D(sp, x, y).is_zero() == (x == y));
    }
}

TEST_CASE("diagonal of a true orbit recovers the point") {
    std::mt19937_64 rng(19);
    TsLimitPseudoOrbit seed = sampling::random_full_shift_pseudo_orbit(3, rng);
    EpBiSeq z = seed.point(0);
    std::vector<EpBiSeq> middle;
    for (std::int64_t i = -1; i <= 1; ++i) middle.push_back(z.shifted(i));
    TsLimitPseudoOrbit orbit = TsLimitPseudoOrbit::make(z, z, middle);
    CHECK(diagonal_shadow(orbit) == z);
}

TEST_CASE("diagonal of constant tails is the step sequence") {
    EpBiSeq zeros = EpBiSeq::constant(2, S(0));
    EpBiSeq ones = EpBiSeq::constant(2, S(1));
    TsLimitPseudoOrbit t = TsLimitPseudoOrbit::make(zeros, ones, {zeros});
    EpBiSeq d = diagonal_shadow(t);
    for (std::int64_t j = -6; j <= -1; ++j) CHECK(d.at(j) == S(0));
    for (std::int64_t j = 1; j <= 6; ++j) CHECK(d.at(j) == S(1));
}

TEST_CASE("verify_decay on a true orbit gives n_p = 0") {
    std::mt19937_64 rng(20);
    FiniteMetricSpace sp = sampling::random_metric_space(3, rng);
    TsLimitPseudoOrbit seed = sampling::random_full_shift_pseudo_orbit(3, rng);
    EpBiSeq z = seed.point(0);
    std::vector<EpBiSeq> middle;
    for (std::int64_t i = -1; i <= 1; ++i) middle.push_back(z.shifted(i));
    TsLimitPseudoOrbit orbit = TsLimitPseudoOrbit::make(z, z, middle);
    for (std::int64_t p : {1, 2, 3}) {
        DecayCheck check = verify_decay(sp, orbit, z, p);
        CHECK(check.ok);
        CHECK(check.n_p == 0);
        CHECK(check.minimal_n_p == 0);
    }
}

TEST_CASE("verify_decay on the two-point glued pseudo-orbit") {
    FiniteMetricSpace sp = two_point(1, 1);
    EpBiSeq a = EpBiSeq::constant(2, S(0));
    EpBiSeq b = EpBiSeq::constant(2, S(1));
    std::vector<EpBiSeq> middle;
    for (int i = 0; i < 7; ++i) middle.push_back(i < 4 ? a : b); // cut m = 4
    TsLimitPseudoOrbit t = TsLimitPseudoOrbit::make(a, b, middle);
    EpBiSeq d = diagonal_shadow(t);
    DecayCheck check = verify_decay(sp, t, d, 2);
    CHECK(check.ok);
    CHECK(check.n_p > 0);
    CHECK(check.n_p <= 5);
    // the bound holds at every checked index beyond n_p by construction
    CHECK(check.minimal_n_p <= check.n_p);
}

TEST_CASE("diagonal shadows satisfy the decay bound on random spaces") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint32_t n = 2 + static_cast<std::uint32_t>(trial % 4);
        FiniteMetricSpace sp = sampling::random_metric_space(n, rng);
        TsLimitPseudoOrbit t = sampling::random_full_shift_pseudo_orbit(n, rng);
        EpBiSeq d = diagonal_shadow(t);
        for (std::int64_t p : {1, 2, 3}) {
            DecayCheck check = verify_decay(sp, t, d, p);
            CHECK(check.ok);
        }
    }
}

TEST_CASE("chained triangle inequalities hold as exact rationals") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t n = 3 + static_cast<std::uint32_t>(trial % 3);
        FiniteMetricSpace sp = sampling::random_metric_space(n, rng);
        TsLimitPseudoOrbit t = sampling::random_full_shift_pseudo_orbit(n, rng);
        for (std::int64_t m : {-3, -1, 0, 2}) {
            for (std::int64_t k = 1; k <= 5; ++k) {
                // d(x_0^(m+k), x^(m)_k) <= sum_{j<k} d(x_j^(m+k-j), x^(m+k-j-1)_{j+1})
                BigRat lhs = sp.dist(t.point(m + k).at(0), t.point(m).at(k));
                BigRat rhs = BigRat::zero();
                for (std::int64_t j = 0; j < k; ++j)
                    rhs = rhs + sp.dist(t.point(m + k - j).at(j), t.point(m + k - j - 1).at(j + 1));
                CHECK(lhs <= rhs);
            }
        }
    }
}

TEST_CASE("componentwise diagonals equal the joined diagonal") {
    // finite product analogue: pairs of letters as one alphabet of pairs
    std::mt19937_64 rng(23);
    const std::uint32_t n1 = 2, n2 = 3;
    auto join_points = [&](const EpBiSeq& p, const EpBiSeq& q) {
        auto sample = [&](std::int64_t i) { return Symbol{p.at(i).id * n2 + q.at(i).id}; };
        const auto pl = static_cast<std::int64_t>(p.left_period().size() * q.left_period().size());
        const auto pr = static_cast<std::int64_t>(p.right_period().size() * q.right_period().size());
        return EpBiSeq::from_samples(n1 * n2, sample, std::min(p.anchor(), q.anchor()),
                                     static_cast<std::uint32_t>(pl),
                                     std::max(p.center_end(), q.center_end()),
                                     static_cast<std::uint32_t>(pr));
    };
    for (int trial = 0; trial < 30; ++trial) {
        TsLimitPseudoOrbit t1 = sampling::random_full_shift_pseudo_orbit(n1, rng, 2);
        TsLimitPseudoOrbit t2 = sampling::random_full_shift_pseudo_orbit(n2, rng, 2);
        // align cuts by padding the smaller middle with tail points
        const std::int64_t m = std::max(t1.cut(), t2.cut());
        std::vector<EpBiSeq> mid;
        for (std::int64_t i = -m + 1; i <= m - 1; ++i) mid.push_back(join_points(t1.point(i), t2.point(i)));
        TsLimitPseudoOrbit joined = TsLimitPseudoOrbit::make(
            join_points(t1.left(), t2.left()), join_points(t1.right(), t2.right()), mid);
        EpBiSeq d1 = diagonal_shadow(t1);
        EpBiSeq d2 = diagonal_shadow(t2);
        CHECK(diagonal_shadow(joined) == join_points(d1, d2));
    }
}
