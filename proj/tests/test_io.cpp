#include <doctest.h>

#include <random>

#include "sft/errors.hpp"
#include "sft/generators.hpp"
#include "sft/io.hpp"
#include "sft/recode.hpp"
#include "sft/sampling.hpp"

using namespace sft;

TEST_CASE("point grammar round trips") {
    Alphabet two = Alphabet::indexed(2);
    EpBiSeq spike = EpBiSeq::make(2, {Symbol{0}}, {Symbol{1}}, {Symbol{0}}, 0);
    CHECK(io::format_point(two, spike) == "0|1|0@0");
    CHECK(io::parse_point(two, "0|1|0@0") == spike);
    CHECK(io::parse_point(two, "0||1@-3") == EpBiSeq::make(2, {Symbol{0}}, {}, {Symbol{1}}, -3));

    std::mt19937_64 rng(3);
    Sft x34 = make_pq_shift(3, 4);
    for (int trial = 0; trial < 100; ++trial) {
        EpBiSeq p = sampling::random_point(x34, rng);
        CHECK(io::parse_point(x34.alphabet(), io::format_point(x34.alphabet(), p)) == p);
    }
}

TEST_CASE("point grammar with multi-character labels uses commas") {
    ProductSft prod = product(make_cycle(2), make_golden_mean());
    const Alphabet& alpha = prod.sft.alphabet();
    REQUIRE(alpha.needs_separator());
    std::mt19937_64 rng(4);
    EpBiSeq p = sampling::random_point(prod.sft, rng);
    std::string text = io::format_point(alpha, p);
    CHECK(text.find(',') != std::string::npos);
    CHECK(io::parse_point(alpha, text) == p);
}

TEST_CASE("point grammar rejects malformed text") {
    Alphabet two = Alphabet::indexed(2);
    CHECK_THROWS_AS((void)io::parse_point(two, "01"), ParseError);
    CHECK_THROWS_AS((void)io::parse_point(two, "0|1|0"), ParseError);
    CHECK_THROWS_AS((void)io::parse_point(two, "0|1|0@x"), ParseError);
    CHECK_THROWS_AS((void)io::parse_point(two, "|1|0@0"), ParseError);
    CHECK_THROWS_AS((void)io::parse_point(two, "2|1|0@0"), ParseError);
}

TEST_CASE("dyadic literals") {
    CHECK(io::parse_dyadic("2^-3") == DyadicDist::pow2(3));
    CHECK(io::parse_dyadic("2^-0") == DyadicDist::pow2(0));
    CHECK(io::parse_dyadic("1") == DyadicDist::pow2(0));
    CHECK_THROWS_AS((void)io::parse_dyadic("0.125"), ParseError);
    CHECK_THROWS_AS((void)io::parse_dyadic("2^3"), ParseError);
}

TEST_CASE("sft files round trip") {
    Sft x34 = make_pq_shift(3, 4);
    std::string text = io::format_sft(x34);
    io::LoadedSft back = io::parse_sft(text);
    CHECK_FALSE(back.recoded);
    CHECK(back.sft.size() == x34.size());
    CHECK(back.sft.transitions() == x34.transitions());
    CHECK(back.sft.name() == "X(3,4)");
}

TEST_CASE("forbidden words trigger recoding") {
    io::LoadedSft gm = io::parse_sft(R"({"alphabet": ["0", "1"], "forbidden": ["11"]})");
    CHECK(gm.recoded);
    CHECK(gm.sft.size() == 2);
    CHECK_FALSE(gm.sft.allowed(*gm.sft.alphabet().find("1"), *gm.sft.alphabet().find("1")));

    CHECK_THROWS_AS((void)io::parse_sft(R"({"alphabet": ["0"], "transitions": [], "forbidden": []})"),
                    ParseError);
    CHECK_THROWS_AS((void)io::parse_sft(R"({"alphabet": ["0"]})"), ParseError);
    CHECK_THROWS_AS((void)io::parse_sft("not json"), ParseError);
}

TEST_CASE("pseudo-orbit files round trip") {
    Sft x34 = make_pq_shift(3, 4);
    std::mt19937_64 rng(5);
    TsLimitPseudoOrbit t = sampling::random_ts_pseudo_orbit(x34, rng);
    std::string text = io::format_pseudo_orbit(x34.alphabet(), t);
    auto back = io::parse_pseudo_orbit(x34.alphabet(), text);
    auto* tb = std::get_if<TsLimitPseudoOrbit>(&back);
    REQUIRE(tb);
    CHECK(tb->left() == t.left());
    CHECK(tb->right() == t.right());
    CHECK(tb->cut() == t.cut());
    for (std::int64_t i = -t.cut(); i <= t.cut(); ++i) CHECK(tb->point(i) == t.point(i));

    FinitePseudoOrbit po = sampling::random_finite_pseudo_orbit(x34, 3, 6, rng);
    auto back2 = io::parse_pseudo_orbit(x34.alphabet(), io::format_pseudo_orbit(x34.alphabet(), po));
    auto* pb = std::get_if<FinitePseudoOrbit>(&back2);
    REQUIRE(pb);
    CHECK(pb->points == po.points);

    CHECK_THROWS_AS((void)io::parse_pseudo_orbit(x34.alphabet(), R"({"finite": ["0|1|0@0"]})"),
                    ParseError);
    CHECK_THROWS_AS(
        (void)io::parse_pseudo_orbit(
            x34.alphabet(), R"({"tslimit": {"left": "0||0@0", "right": "0||0@0", "middle": ["0||0@0"], "m": 2}})"),
        ParseError);
}

TEST_CASE("specification files") {
    Sft x34 = make_pq_shift(3, 4);
    Specification s = io::parse_specification(
        x34.alphabet(), R"([{"a": 0, "b": 4, "point": "012||012@0"}, {"a": 30, "b": 32, "point": "012||012@1"}])");
    CHECK(s.segments.size() == 2);
    CHECK(s.first_start() == 0);
    CHECK(s.last_end() == 32);
    CHECK_THROWS_AS((void)io::parse_specification(
                        x34.alphabet(), R"([{"a": 5, "b": 4, "point": "012||012@0"}])"),
                    ParseError);
}

TEST_CASE("metric space files") {
    FiniteMetricSpace sp = io::parse_metric_space("2\n0 1/2\n1/2 0\n");
    CHECK(sp.size() == 2);
    CHECK(sp.dist(0u, 1u) == BigRat(1, 2));
    CHECK_FALSE(sp.rescaled());

    FiniteMetricSpace wide = io::parse_metric_space("2\n0 4\n4 0\n");
    CHECK(wide.rescaled());
    CHECK(wide.dist(0u, 1u) == BigRat::one());

    CHECK_THROWS_AS((void)io::parse_metric_space("2\n0 1\n"), ParseError);
    CHECK_THROWS_AS((void)io::parse_metric_space("2\n0 x\nx 0\n"), ParseError);
}
