#include "sft/shadowing.hpp"

#include <algorithm>
#include <memory>

#include "sft/analysis.hpp"
#include "sft/errors.hpp"

namespace sft {

namespace {

std::int64_t pos_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

CyclicDecomposition require_transitive(const Sft& x, const char* op) {
    CyclicDecomposition d = period_and_classes(x);
    if (!d.transitive) throw NotTransitiveError(std::string(op) + ": SFT is not transitive");
    return d;
}

// Minimal-|K| representative of r mod N, preferring the positive one on ties.
std::int64_t min_abs_representative(std::int64_t r, std::int64_t n) {
    r = pos_mod(r, n);
    return (2 * r <= n) ? r : r - n;
}

} // namespace

FiniteShadow shadow_finite(const Sft& x, const FinitePseudoOrbit& po) {
    const auto& pts = po.points;
    DyadicDist delta = validate_delta(pts);
    if (delta > DyadicDist::pow2(1))
        throw DeltaTooLargeError("shadow_finite: step error above 2^-1, diagonal may leave the shift");
    for (const auto& p : pts)
        if (!member(x, p)) throw PreconditionError("shadow_finite: pseudo-orbit point outside the SFT");

    const auto m = static_cast<std::int64_t>(pts.size()) - 1;
    const EpBiSeq& first = pts.front();
    const EpBiSeq& last = pts.back();
    auto sample = [&](std::int64_t j) -> Symbol {
        if (j < 0) return first.at(j);
        if (j > m) return last.at(j - m);
        return pts[static_cast<std::size_t>(j)].at(0);
    };
    const std::int64_t left_end = std::min<std::int64_t>(0, first.anchor());
    const std::int64_t right_begin = std::max<std::int64_t>(m + 1, m + last.center_end());
    EpBiSeq y = EpBiSeq::from_samples(x.size(), sample, left_end,
                                      static_cast<std::uint32_t>(first.left_period().size()),
                                      right_begin,
                                      static_cast<std::uint32_t>(last.right_period().size()));
    if (!member(x, y)) throw std::logic_error("shadow_finite: diagonal left the shift");

    DyadicDist eps = DyadicDist::zero();
    for (std::int64_t i = 0; i <= m; ++i) {
        DyadicDist d = dist(y.shifted(i), pts[static_cast<std::size_t>(i)]);
        if (d > eps) eps = d;
    }
    return FiniteShadow{std::move(y), eps};
}

Heteroclinic connect_heteroclinic(const Sft& x, const EpBiSeq& target, const EpBiSeq& source) {
    if (!member(x, target) || !member(x, source))
        throw PreconditionError("connect_heteroclinic: endpoints must lie in the SFT");
    CyclicDecomposition d = require_transitive(x, "connect_heteroclinic");
    if (target == source) return Heteroclinic{target, 0};

    const auto n = static_cast<std::int64_t>(d.period);
    const std::int64_t c_target = *d.class_of[target.at(0).id];
    const std::int64_t c_source = *d.class_of[source.at(0).id];
    const std::int64_t gap = min_abs_representative(c_target - c_source, n);

    const std::int64_t cap =
        2 * (static_cast<std::int64_t>(x.size()) * x.size() + 2 * n + 8);
    for (std::int64_t m = 1; m <= cap; ++m) {
        auto res = connect_path(x, source.at(-m), target.at(m - gap), 2 * m);
        auto* word = std::get_if<std::vector<Symbol>>(&res);
        if (!word) continue;
        auto path = std::make_shared<std::vector<Symbol>>(std::move(*word));
        auto sample = [&source, &target, path, m, gap](std::int64_t j) -> Symbol {
            if (j <= -m) return source.at(j);
            if (j >= m) return target.at(j - gap);
            return (*path)[static_cast<std::size_t>(j + m)];
        };
        const std::int64_t left_end = std::min(-m, source.anchor());
        const std::int64_t right_begin = std::max(m, target.center_end() + gap);
        EpBiSeq z = EpBiSeq::from_samples(
            x.size(), sample, left_end, static_cast<std::uint32_t>(source.left_period().size()),
            right_begin, static_cast<std::uint32_t>(target.right_period().size()));
        return Heteroclinic{std::move(z), gap};
    }
    throw std::logic_error("connect_heteroclinic: no connecting path within the search cap");
}

GapShadow two_sided_limit_shadow(const Sft& x, const TsLimitPseudoOrbit& t) {
    validate_members(x, t);
    require_transitive(x, "two_sided_limit_shadow");
    // the shadow must be backward asymptotic to the left tail orbit and, after
    // applying the gap, forward asymptotic to the right tail orbit; the middle
    // block never matters
    Heteroclinic h = connect_heteroclinic(x, t.right(), t.left());
    return GapShadow{std::move(h.point), h.gap};
}

bool verify_two_sided(const TsLimitPseudoOrbit& t, const EpBiSeq& y, std::int64_t gap) {
    return tail_sync(y, t.left(), Direction::Backward).has_value() &&
           tail_sync(y.shifted(gap), t.right(), Direction::Forward).has_value();
}

FinitePseudoOrbit chain_connect(const Sft& x, const EpBiSeq& from, const EpBiSeq& to,
                                DyadicDist delta) {
    if (!member(x, from) || !member(x, to))
        throw PreconditionError("chain_connect: endpoints must lie in the SFT");

    // an exact orbit hop needs no construction
    const std::int64_t direct_cap =
        64 + static_cast<std::int64_t>(from.description_size() + to.description_size());
    for (std::int64_t j = 1; j <= direct_cap; ++j) {
        if (to == from.shifted(j)) {
            std::vector<EpBiSeq> pts;
            pts.reserve(static_cast<std::size_t>(j) + 1);
            for (std::int64_t i = 0; i <= j; ++i) pts.push_back(from.shifted(i));
            return FinitePseudoOrbit{std::move(pts), DyadicDist::zero()};
        }
    }

    if (delta.is_zero())
        throw PreconditionError("chain_connect: endpoints not on one orbit, delta must be positive");
    if (delta > DyadicDist::pow2(1))
        throw PreconditionError("chain_connect: delta must be at most 2^-1");
    require_transitive(x, "chain_connect");
    const std::int64_t k = delta.exponent();

    // omega-limit cycle of `from` and alpha-limit cycle of `to`
    const EpBiSeq fwd_cycle = EpBiSeq::periodic(
        x.size(), std::vector<Symbol>(from.right_period()), from.center_end());
    const EpBiSeq bwd_cycle = EpBiSeq::periodic(
        x.size(), std::vector<Symbol>(to.left_period()),
        to.anchor() - static_cast<std::int64_t>(to.left_period().size()));

    Heteroclinic h = connect_heteroclinic(x, bwd_cycle, fwd_cycle);
    const EpBiSeq& z = h.point;
    const std::int64_t gap = h.gap;

    auto back = tail_sync(z, fwd_cycle, Direction::Backward);
    auto frwd = tail_sync(z.shifted(gap), bwd_cycle, Direction::Forward);
    if (!back || !frwd) throw std::logic_error("chain_connect: heteroclinic point fails its tail syncs");

    // seam margins: each seam must agree on the window [-k, k]
    const std::int64_t m =
        std::max<std::int64_t>({back->sync_index + k, frwd->sync_index + gap + k, 1}) + 1;
    const auto p1 = static_cast<std::int64_t>(fwd_cycle.right_period().size());
    const auto p2 = static_cast<std::int64_t>(bwd_cycle.right_period().size());
    std::int64_t m1 = std::max<std::int64_t>(from.center_end() + k, 1);
    m1 += pos_mod(-m - m1, p1); // m1 = -m (mod p1)
    std::int64_t m2 = std::max<std::int64_t>(k - to.anchor() + 1, 1);
    m2 += pos_mod(gap - m - m2, p2); // m2 = gap - m (mod p2)

    std::vector<EpBiSeq> pts;
    pts.reserve(static_cast<std::size_t>(m1 + 2 * m + m2 + 1));
    for (std::int64_t i = 0; i < m1; ++i) pts.push_back(from.shifted(i));
    for (std::int64_t i = -m; i < m; ++i) pts.push_back(z.shifted(i));
    for (std::int64_t i = -m2; i <= 0; ++i) pts.push_back(to.shifted(i));
    return FinitePseudoOrbit{std::move(pts), delta};
}

std::int64_t minimal_gap(const Sft& x) {
    CyclicDecomposition d = require_transitive(x, "minimal_gap");
    const auto n = static_cast<std::int64_t>(d.period);
    std::int64_t worst = 0;
    for (std::int64_t r = 0; r < n; ++r)
        worst = std::max<std::int64_t>(worst, std::llabs(min_abs_representative(r, n)));
    return worst;
}

} // namespace sft
