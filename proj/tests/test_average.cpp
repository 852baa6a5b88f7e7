#include <doctest.h>

#include <vector>

#include "sft/average.hpp"
#include "sft/errors.hpp"
#include "sft/generators.hpp"
#include "sft/point.hpp"

using namespace sft;

namespace {

Symbol S(std::uint32_t id) { return Symbol{id}; }

// alternating fixed-point blocks of length block on the full 2-shift
std::vector<EpBiSeq> block_orbit(std::size_t blocks, std::size_t block) {
    EpBiSeq fixed[2] = {EpBiSeq::constant(2, S(0)), EpBiSeq::constant(2, S(1))};
    std::vector<EpBiSeq> pts;
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t i = 0; i < block; ++i) pts.push_back(fixed[b % 2]);
    return pts;
}

} // namespace

TEST_CASE("true orbit gives all-zero averages") {
    EpBiSeq zeros = EpBiSeq::constant(2, S(0));
    std::vector<EpBiSeq> orbit(12, zeros);
    AverageReport rep = average_report(orbit, zeros, 8);
    CHECK(rep.worst_window_average.is_zero());
    REQUIRE(rep.running_tracing_average.size() == 8);
    for (const auto& avg : rep.running_tracing_average) CHECK(avg.is_zero());
}

TEST_CASE("alternating blocks have seam-counting window averages") {
    const std::size_t block = 5;
    auto pts = block_orbit(8, block);
    const std::int64_t n = 10;
    AverageReport rep = average_report(pts, std::nullopt, n);
    // seams carry step error exactly 1; a window of 10 steps sees at most 2
    // seams with block length 5, and some window realizes that count
    CHECK(rep.worst_window_average == BigRat(2, static_cast<std::uint64_t>(n)));

    // exact per-window recount
    std::vector<int> is_seam;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        is_seam.push_back(dist(pts[i].shifted(1), pts[i + 1]).is_zero() ? 0 : 1);
    int best = 0;
    for (std::size_t start = 0; start + n <= is_seam.size(); ++start) {
        int count = 0;
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) count += is_seam[start + i];
        best = std::max(best, count);
    }
    CHECK(rep.worst_window_average == BigRat(static_cast<std::uint64_t>(best),
                                             static_cast<std::uint64_t>(n)));
}

TEST_CASE("doubling blocks drive the step-error average down") {
    // block lengths 2^j: the Cesaro step-error average at horizon 2^J falls
    EpBiSeq fixed[2] = {EpBiSeq::constant(2, S(0)), EpBiSeq::constant(2, S(1))};
    std::vector<EpBiSeq> pts;
    for (std::size_t j = 0; pts.size() < (1u << 9) + 1; ++j)
        for (std::size_t i = 0; i < (1u << j); ++i) pts.push_back(fixed[j % 2]);

    BigRat previous = BigRat(1, 1) + BigRat(1, 1);
    for (std::int64_t J = 4; J <= 9; ++J) {
        const auto n = std::size_t(1) << J;
        std::vector<EpBiSeq> prefix(pts.begin(), pts.begin() + n + 1);
        // one admissible window only, so the worst window average is the
        // Cesaro average of the first 2^J step errors
        AverageReport rep = average_report(prefix, std::nullopt, static_cast<std::int64_t>(n));
        DyadicSum sum;
        for (std::size_t i = 0; i < n; ++i) sum.add(dist(pts[i].shifted(1), pts[i + 1]));
        CHECK(rep.worst_window_average == sum.averaged_over(n));
        CHECK(rep.worst_window_average < previous);
        previous = rep.worst_window_average;
    }
}

TEST_CASE("tracing averages are exact rationals") {
    auto pts = block_orbit(4, 4);
    // diagonal-style candidate: reads the block symbol at each index
    auto sample = [&](std::int64_t j) -> Symbol {
        if (j < 0) return S(0);
        if (j >= static_cast<std::int64_t>(pts.size()))
            return pts.back().at(j - static_cast<std::int64_t>(pts.size()) + 1);
        return pts[static_cast<std::size_t>(j)].at(0);
    };
    EpBiSeq y = EpBiSeq::from_samples(2, sample, 0, 1, static_cast<std::int64_t>(pts.size()), 1);
    AverageReport rep = average_report(pts, y, 12);
    REQUIRE(rep.running_tracing_average.size() == 12);
    // recompute the final entry directly
    DyadicSum sum;
    for (std::int64_t i = 0; i < 12; ++i) sum.add(dist(y.shifted(i), pts[static_cast<std::size_t>(i)]));
    CHECK(rep.running_tracing_average.back() == sum.averaged_over(12));
}

TEST_CASE("horizon longer than the data is rejected") {
    EpBiSeq zeros = EpBiSeq::constant(2, S(0));
    std::vector<EpBiSeq> orbit(5, zeros);
    CHECK_THROWS_AS((void)average_report(orbit, std::nullopt, 5), HorizonTooLongError);
    CHECK_NOTHROW((void)average_report(orbit, std::nullopt, 4));
}
