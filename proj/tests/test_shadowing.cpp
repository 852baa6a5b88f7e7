#include <doctest.h>

#include <random>
#include <vector>

#include "sft/analysis.hpp"
#include "sft/errors.hpp"
#include "sft/generators.hpp"
#include "sft/oracle.hpp"
#include "sft/recode.hpp"
#include "sft/sampling.hpp"
#include "sft/shadowing.hpp"

using namespace sft;

namespace {

Symbol S(std::uint32_t id) { return Symbol{id}; }

std::vector<Symbol> word(std::initializer_list<std::uint32_t> ids) {
    std::vector<Symbol> w;
    for (auto id : ids) w.push_back(S(id));
    return w;
}

// the two points of the two-point cycle: phase0 has symbol 0 at index 0
EpBiSeq cycle2_point(int phase) {
    return EpBiSeq::periodic(2, word({0, 1}), -phase);
}

TsLimitPseudoOrbit orbit_ts(const EpBiSeq& z, std::int64_t m) {
    std::vector<EpBiSeq> middle;
    for (std::int64_t i = -m + 1; i <= m - 1; ++i) middle.push_back(z.shifted(i));
    return TsLimitPseudoOrbit::make(z, z, std::move(middle));
}

} // namespace

TEST_CASE("validate_delta") {
    Sft full2 = make_full_shift(2);
    std::mt19937_64 rng(1);
    EpBiSeq x = sampling::random_point(full2, rng);
    std::vector<EpBiSeq> orbit{x, x.shifted(1), x.shifted(2)};
    CHECK(validate_delta(orbit).is_zero());

    EpBiSeq zeros = EpBiSeq::constant(2, S(0));
    EpBiSeq ones = EpBiSeq::constant(2, S(1));
    CHECK(validate_delta({zeros, ones}) == DyadicDist::pow2(0));

    // random pseudo-orbits: equals a direct recomputation
    for (int trial = 0; trial < 50; ++trial) {
        FinitePseudoOrbit po = sampling::random_finite_pseudo_orbit(full2, 3, 8, rng);
        DyadicDist worst = DyadicDist::zero();
        for (std::size_t i = 0; i + 1 < po.points.size(); ++i) {
            DyadicDist d = dist(po.points[i].shifted(1), po.points[i + 1]);
            if (worst < d) worst = d;
        }
        CHECK(validate_delta(po.points) == worst);
        CHECK(worst <= DyadicDist::pow2(3));
    }
}

TEST_CASE("shadow_finite on a true orbit returns its start") {
    Sft x34 = make_pq_shift(3, 4);
    std::mt19937_64 rng(2);
    EpBiSeq x = sampling::random_point(x34, rng);
    std::vector<EpBiSeq> orbit;
    for (int i = 0; i < 6; ++i) orbit.push_back(x.shifted(i));
    FiniteShadow sh = shadow_finite(x34, FinitePseudoOrbit{orbit, {}});
    CHECK(sh.point == x);
    CHECK(sh.eps.is_zero());
}

TEST_CASE("shadow_finite tracks a glitched pseudo-orbit") {
    Sft full2 = make_full_shift(2);
    // one glitch far from index 0: a stray 1 appears at coordinate 5
    EpBiSeq zeros = EpBiSeq::constant(2, S(0));
    std::vector<EpBiSeq> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(zeros);
    EpBiSeq glitched = EpBiSeq::make(2, word({0}), word({1}), word({0}), 5);
    pts.push_back(glitched); // dist(sigma zeros, glitched) = 2^-5
    for (int i = 1; i <= 4; ++i) pts.push_back(glitched.shifted(i));
    FinitePseudoOrbit po{pts, {}};
    DyadicDist delta = validate_delta(pts);
    CHECK(delta == DyadicDist::pow2(5));
    FiniteShadow sh = shadow_finite(full2, po);
    CHECK(member(full2, sh.point));
    CHECK(sh.eps <= delta);
    CHECK(sh.eps <= DyadicDist::pow2(2));
    // exhaustive check of the reported eps
    DyadicDist worst = DyadicDist::zero();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        DyadicDist d = dist(sh.point.shifted(static_cast<std::int64_t>(i)), pts[i]);
        if (worst < d) worst = d;
    }
    CHECK(worst == sh.eps);
}

TEST_CASE("shadow_finite over random pseudo-orbits stays within delta") {
    std::mt19937_64 rng(4);
    for (const Sft& x : {make_full_shift(2), make_golden_mean(), make_pq_shift(3, 4)}) {
        for (int trial = 0; trial < 100; ++trial) {
            FinitePseudoOrbit po = sampling::random_finite_pseudo_orbit(x, 3, 10, rng);
            DyadicDist delta = validate_delta(po.points);
            FiniteShadow sh = shadow_finite(x, po);
            CHECK(member(x, sh.point));
            CHECK(sh.eps <= delta);
            CHECK(sh.eps <= DyadicDist::pow2(3));
        }
    }
}

TEST_CASE("shadow_finite rejects coarse pseudo-orbits") {
    Sft gm = make_golden_mean();
    EpBiSeq zeros = EpBiSeq::constant(2, S(0));
    EpBiSeq lone = EpBiSeq::make(2, word({0}), word({1}), word({0}), 0);
    // step error 2^0 = 1 > 2^-1
    CHECK_THROWS_AS((void)shadow_finite(gm, FinitePseudoOrbit{{zeros, lone}, {}}),
                    DeltaTooLargeError);
}

TEST_CASE("connect_heteroclinic") {
    Sft full2 = make_full_shift(2);
    EpBiSeq zeros = EpBiSeq::constant(2, S(0));
    EpBiSeq ones = EpBiSeq::constant(2, S(1));

    Heteroclinic same = connect_heteroclinic(full2, zeros, zeros);
    CHECK(same.gap == 0);
    CHECK(same.point == zeros);

    // backward asymptotic to 0^inf, forward to 1^inf, gap 0 on a mixing SFT
    Heteroclinic h = connect_heteroclinic(full2, ones, zeros);
    CHECK(h.gap == 0);
    CHECK(tail_sync(h.point, zeros, Direction::Backward));
    CHECK(tail_sync(h.point.shifted(h.gap), ones, Direction::Forward));
    CHECK(member(full2, h.point));

    // two-point cycle, opposite phases force |gap| = 1
    Sft c2 = make_cycle(2);
    Heteroclinic odd = connect_heteroclinic(c2, cycle2_point(1), cycle2_point(0));
    CHECK(std::abs(odd.gap) == 1);
    CHECK(tail_sync(odd.point, cycle2_point(0), Direction::Backward));
    CHECK(tail_sync(odd.point.shifted(odd.gap), cycle2_point(1), Direction::Forward));
    // the connection is one of the two points of the system
    bool is_system_point = odd.point == cycle2_point(0) || odd.point == cycle2_point(1);
    CHECK(is_system_point);
}

TEST_CASE("two_sided_limit_shadow basics") {
    Sft full2 = make_full_shift(2);
    EpBiSeq zeros = EpBiSeq::constant(2, S(0));
    EpBiSeq ones = EpBiSeq::constant(2, S(1));
    TsLimitPseudoOrbit t = TsLimitPseudoOrbit::make(zeros, ones, {zeros});
    GapShadow sh = two_sided_limit_shadow(full2, t);
    CHECK(sh.gap == 0);
    CHECK(verify_two_sided(t, sh.point, sh.gap));
    CHECK(member(full2, sh.point));
    // the shadow is the step point 0^inf 1^inf up to phase
    CHECK(tail_sync(sh.point, zeros, Direction::Backward));
    CHECK(tail_sync(sh.point, ones, Direction::Forward));
}

TEST_CASE("two-point cycle needs gap one exactly on parity mismatch") {
    Sft c2 = make_cycle(2);
    EpBiSeq p0 = cycle2_point(0);
    EpBiSeq p1 = cycle2_point(1);

    TsLimitPseudoOrbit mismatched = TsLimitPseudoOrbit::make(p0, p1, {p0});
    GapShadow sh = two_sided_limit_shadow(c2, mismatched);
    CHECK(std::abs(sh.gap) == 1);
    CHECK(verify_two_sided(mismatched, sh.point, sh.gap));

    TsLimitPseudoOrbit matched = TsLimitPseudoOrbit::make(p0, p0.shifted(4), {p1});
    GapShadow sh0 = two_sided_limit_shadow(c2, matched);
    CHECK(sh0.gap == 0);
    CHECK(verify_two_sided(matched, sh0.point, sh0.gap));
}

TEST_CASE("mixing SFTs always get gap zero") {
    std::mt19937_64 rng(6);
    Sft x34 = make_pq_shift(3, 4);
    for (int trial = 0; trial < 60; ++trial) {
        TsLimitPseudoOrbit t = sampling::random_ts_pseudo_orbit(x34, rng);
        GapShadow sh = two_sided_limit_shadow(x34, t);
        CHECK(sh.gap == 0);
        CHECK(verify_two_sided(t, sh.point, sh.gap));
        CHECK(member(x34, sh.point));
        // forward and backward limit shadowing hold separately
        CHECK(tail_sync(sh.point, t.left(), Direction::Backward));
        CHECK(tail_sync(sh.point.shifted(sh.gap), t.right(), Direction::Forward));
    }
}

TEST_CASE("the gap depends only on the tail phases, never on the middle") {
    std::mt19937_64 rng(7);
    Sft c4 = make_cycle(4);
    for (int trial = 0; trial < 30; ++trial) {
        TsLimitPseudoOrbit t = sampling::random_ts_pseudo_orbit(c4, rng);
        GapShadow base = two_sided_limit_shadow(c4, t);
        for (int mut = 0; mut < 3; ++mut) {
            std::vector<EpBiSeq> middle;
            for (std::size_t i = 0; i < t.middle().size(); ++i)
                middle.push_back(sampling::random_point(c4, rng));
            TsLimitPseudoOrbit mutated = TsLimitPseudoOrbit::make(t.left(), t.right(), middle);
            CHECK(two_sided_limit_shadow(c4, mutated).gap == base.gap);
        }
    }
}

TEST_CASE("verify_two_sided agrees with a window scan") {
    std::mt19937_64 rng(8);
    Sft c2 = make_cycle(2);
    for (int trial = 0; trial < 100; ++trial) {
        TsLimitPseudoOrbit t = sampling::random_ts_pseudo_orbit(c2, rng);
        EpBiSeq y = sampling::random_point(c2, rng);
        for (std::int64_t gap : {-1, 0, 1}) {
            bool fast = verify_two_sided(t, y, gap);
            // window scan: all coordinate agreements past a wide cutoff
            const std::int64_t w = 4 * 2 + 16;
            bool brute = true;
            for (std::int64_t i = w; i <= 2 * w; ++i) {
                if (y.shifted(gap).at(i) != t.right().at(i)) brute = false;
                if (y.at(-i) != t.left().at(-i)) brute = false;
            }
            CHECK(fast == brute);
        }
    }
    // a left tail point with a mismatched right tail never verifies
    EpBiSeq p0 = cycle2_point(0);
    EpBiSeq p1 = cycle2_point(1);
    TsLimitPseudoOrbit t = TsLimitPseudoOrbit::make(p0, p1, {p0});
    CHECK_FALSE(verify_two_sided(t, p0, 0));
}

TEST_CASE("chain_connect exact orbit hop") {
    Sft x34 = make_pq_shift(3, 4);
    std::mt19937_64 rng(9);
    EpBiSeq x = sampling::random_point(x34, rng);
    FinitePseudoOrbit po = chain_connect(x34, x, x.shifted(1), DyadicDist::pow2(4));
    CHECK(po.points.size() == 2);
    CHECK(po.points.front() == x);
    CHECK(po.points.back() == x.shifted(1));
    CHECK(validate_delta(po.points).is_zero());

    Sft c2 = make_cycle(2);
    FinitePseudoOrbit hop = chain_connect(c2, cycle2_point(0), cycle2_point(1), DyadicDist::pow2(1));
    CHECK(hop.points.size() == 2);
    CHECK(validate_delta(hop.points).is_zero());
}

TEST_CASE("chain_connect hits the requested delta with exact endpoints") {
    std::mt19937_64 rng(10);
    for (const Sft& x : {make_pq_shift(3, 4), make_golden_mean(), make_cycle(3)}) {
        for (int trial = 0; trial < 40; ++trial) {
            EpBiSeq from = sampling::random_point(x, rng);
            EpBiSeq to = sampling::random_point(x, rng);
            for (std::int64_t k : {1, 4, 6}) {
                FinitePseudoOrbit po = chain_connect(x, from, to, DyadicDist::pow2(k));
                CHECK(po.points.front() == from);
                CHECK(po.points.back() == to);
                CHECK(validate_delta(po.points) <= DyadicDist::pow2(k));
                for (const auto& p : po.points) CHECK(member(x, p));
            }
        }
    }
}

TEST_CASE("minimal_gap") {
    CHECK(minimal_gap(make_full_shift(2)) == 0);
    CHECK(minimal_gap(make_cycle(2)) == 1);
    CHECK(minimal_gap(make_pq_shift(3, 4)) == 0);
    for (std::uint32_t n : {2u, 3u, 4u, 5u, 6u})
        CHECK(minimal_gap(make_cycle(n)) == static_cast<std::int64_t>(n / 2));

    // cross-check on the cycle: every phase-mismatch residue is realized by
    // some pseudo-orbit, and the brute search finds exactly the representative
    for (std::uint32_t n : {2u, 3u, 4u}) {
        Sft cyc = make_cycle(n);
        std::vector<Symbol> loop;
        for (std::uint32_t i = 0; i < n; ++i) loop.push_back(S(i));
        EpBiSeq base = EpBiSeq::periodic(n, loop, 0);
        std::int64_t worst = 0;
        for (std::uint32_t r = 0; r < n; ++r) {
            TsLimitPseudoOrbit t = TsLimitPseudoOrbit::make(base, base.shifted(r), {base});
            auto found = brute_shadow_search(cyc, t, n, EnumBounds{});
            REQUIRE(found);
            CHECK(verify_two_sided(t, found->point, found->gap));
            worst = std::max<std::int64_t>(worst, std::llabs(found->gap));
        }
        CHECK(worst == minimal_gap(cyc));
    }

    CHECK_THROWS_AS((void)minimal_gap(product(make_cycle(2), make_cycle(2)).sft),
                    NotTransitiveError);
}

TEST_CASE("power shifts keep gap-0 shadowing on mixing SFTs") {
    // encode a pseudo-orbit into the n-block power shift, shadow there, and
    // decode: the result gap-0 shadows the original for sigma^n
    std::mt19937_64 rng(11);
    Sft x34 = make_pq_shift(3, 4);
    for (std::uint32_t n : {2u, 3u}) {
        CodedSft pw = power_shift(x34, n);
        for (int trial = 0; trial < 20; ++trial) {
            TsLimitPseudoOrbit t = sampling::random_ts_pseudo_orbit(x34, rng);
            std::vector<EpBiSeq> middle;
            for (const auto& p : t.middle()) middle.push_back(pw.encode(p));
            TsLimitPseudoOrbit enc =
                TsLimitPseudoOrbit::make(pw.encode(t.left()), pw.encode(t.right()), middle);
            GapShadow sh = two_sided_limit_shadow(pw.sft, enc);
            CHECK(sh.gap == 0);
            EpBiSeq y = pw.decode(sh.point);
            CHECK(member(x34, y));
            CHECK(tail_sync(y, t.left(), Direction::Backward));
            CHECK(tail_sync(y, t.right(), Direction::Forward));
        }
    }
}

TEST_CASE("no shadow across separate components") {
    // two disjoint self-loops: left tail in one, right tail in the other
    Sft two = Sft(Alphabet::indexed(2), {{S(0), S(0)}, {S(1), S(1)}});
    EpBiSeq zeros = EpBiSeq::constant(2, S(0));
    EpBiSeq ones = EpBiSeq::constant(2, S(1));
    TsLimitPseudoOrbit t = TsLimitPseudoOrbit::make(zeros, ones, {zeros});
    auto found = brute_shadow_search(two, t, 4, EnumBounds{});
    CHECK_FALSE(found);
    CHECK_THROWS_AS((void)two_sided_limit_shadow(two, t), NotTransitiveError);
}

TEST_CASE("gap bound over named SFTs up to six symbols") {
    std::mt19937_64 rng(13);
    std::vector<Sft> named{make_pq_shift(3, 4), make_pq_shift(2, 5), make_full_shift(3),
                           make_golden_mean(), make_cycle(4), make_cycle(5), make_cycle(6)};
    for (const Sft& x : named) {
        CyclicDecomposition d = period_and_classes(x);
        for (int trial = 0; trial < 200; ++trial) {
            TsLimitPseudoOrbit t = sampling::random_ts_pseudo_orbit(x, rng);
            GapShadow sh = two_sided_limit_shadow(x, t);
            CHECK(verify_two_sided(t, sh.point, sh.gap));
            CHECK(std::llabs(sh.gap) <= static_cast<std::int64_t>(d.period) - 1);
            if (d.mixing) CHECK(sh.gap == 0);
        }
    }
}

TEST_CASE("decomposition table on a non-transitive SFT") {
    // golden-mean component feeding an isolated self-loop
    Sft x(Alphabet::indexed(3),
          {{S(0), S(0)}, {S(0), S(1)}, {S(1), S(0)}, {S(0), S(2)}, {S(2), S(2)}});
    CyclicDecomposition d = period_and_classes(x);
    CHECK_FALSE(d.transitive);
    CHECK_FALSE(d.mixing);
    // the designated component is the larger essential one: {0, 1}, period 1
    CHECK(d.period == 1);
    CHECK(d.class_of[0].has_value());
    CHECK(d.class_of[1].has_value());
    CHECK_FALSE(d.class_of[2].has_value());
    std::size_t essential = 0;
    for (const auto& row : d.table)
        if (row.essential) ++essential;
    CHECK(essential == 2);
}

TEST_CASE("gap bounds and mixing behavior over the whole small family") {
    std::mt19937_64 rng(12);
    for (const Sft& x : enumerate_sfts(2)) {
        CyclicDecomposition d = period_and_classes(x);
        if (!d.transitive) continue;
        for (int trial = 0; trial < 25; ++trial) {
            TsLimitPseudoOrbit t = sampling::random_ts_pseudo_orbit(x, rng);
            GapShadow sh = two_sided_limit_shadow(x, t);
            CHECK(verify_two_sided(t, sh.point, sh.gap));
            CHECK(member(x, sh.point));
            CHECK(std::llabs(sh.gap) <= static_cast<std::int64_t>(d.period) - 1);
            if (d.mixing) CHECK(sh.gap == 0);
        }
    }
}
