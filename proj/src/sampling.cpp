#include "sft/sampling.hpp"

#include <algorithm>
#include <set>

#include "sft/analysis.hpp"
#include "sft/errors.hpp"
#include "sft/oracle.hpp"

namespace sft::sampling {

namespace {

std::int64_t pick(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

const std::vector<Symbol>& pick_cycle(const std::vector<std::vector<Symbol>>& cycles, Rng& rng) {
    if (cycles.empty()) throw PreconditionError("sampling: SFT has no short cycle");
    return cycles[static_cast<std::size_t>(pick(rng, 0, static_cast<std::int64_t>(cycles.size()) - 1))];
}

// Random walk of the exact length from u to v, if one exists.
std::optional<std::vector<Symbol>> random_walk_between(const Sft& x, Symbol u, Symbol v,
                                                       std::int64_t len, Rng& rng) {
    if (len < 0) return std::nullopt;
    // reach[t] = symbols that still reach v in exactly len - t steps
    std::vector<std::vector<bool>> can(static_cast<std::size_t>(len) + 1,
                                       std::vector<bool>(x.size(), false));
    can[static_cast<std::size_t>(len)][v.id] = true;
    for (std::int64_t t = len; t-- > 0;)
        for (std::uint32_t w = 0; w < x.size(); ++w)
            for (Symbol s : x.successors(Symbol{w}))
                if (can[static_cast<std::size_t>(t) + 1][s.id]) can[static_cast<std::size_t>(t)][w] = true;
    if (!can[0][u.id]) return std::nullopt;
    std::vector<Symbol> walk{u};
    for (std::int64_t t = 1; t <= len; ++t) {
        std::vector<Symbol> options;
        for (Symbol s : x.successors(walk.back()))
            if (can[static_cast<std::size_t>(t)][s.id]) options.push_back(s);
        walk.push_back(options[static_cast<std::size_t>(
            pick(rng, 0, static_cast<std::int64_t>(options.size()) - 1))]);
    }
    return walk;
}

EpBiSeq assemble(const Sft& x, const EpBiSeq& left_germ, const std::vector<Symbol>& center,
                 const EpBiSeq& right_germ, std::int64_t beta) {
    const std::int64_t gamma = beta + static_cast<std::int64_t>(center.size());
    auto sample = [&](std::int64_t i) -> Symbol {
        if (i < beta) return left_germ.at(i);
        if (i >= gamma) return right_germ.at(i);
        return center[static_cast<std::size_t>(i - beta)];
    };
    return EpBiSeq::from_samples(x.size(), sample, beta,
                                 static_cast<std::uint32_t>(left_germ.right_period().size()),
                                 gamma,
                                 static_cast<std::uint32_t>(right_germ.right_period().size()));
}

// Tails on the two given germs, center found by length search. Fails when
// the germs' cyclic phases are incompatible (no connecting length exists).
std::optional<EpBiSeq> connect_germs(const Sft& x, const EpBiSeq& left_germ,
                                     const EpBiSeq& right_germ, std::int64_t beta, Rng& rng) {
    const std::int64_t cap = 2 * (static_cast<std::int64_t>(x.size()) * x.size() + 8);
    const std::int64_t start = pick(rng, 0, 4);
    for (std::int64_t extra = 0; extra <= cap; ++extra) {
        const std::int64_t n = start + extra;
        const std::int64_t gamma = beta + n;
        auto walk = random_walk_between(x, left_germ.at(beta - 1), right_germ.at(gamma), n + 1, rng);
        if (!walk) continue;
        std::vector<Symbol> center(walk->begin() + 1, walk->end() - 1);
        return assemble(x, left_germ, center, right_germ, beta);
    }
    return std::nullopt;
}

// Random member point with tails drawn from the given cycle pool. The first
// tries may pick phase-incompatible germ pairs; a point whose right tail is
// the left germ itself always exists, so the last resort connects the germ
// to itself.
EpBiSeq random_point_from(const Sft& x, const std::vector<std::vector<Symbol>>& pool, Rng& rng) {
    const auto& wl = pick_cycle(pool, rng);
    EpBiSeq left_germ = EpBiSeq::periodic(x.size(), std::vector<Symbol>(wl), pick(rng, -3, 3));
    for (int attempt = 0; attempt < 8; ++attempt) {
        const auto& wr = pick_cycle(pool, rng);
        EpBiSeq right_germ = EpBiSeq::periodic(x.size(), std::vector<Symbol>(wr), pick(rng, -3, 3));
        if (auto p = connect_germs(x, left_germ, right_germ, pick(rng, -3, 3), rng)) return *p;
    }
    auto p = connect_germs(x, left_germ, left_germ, pick(rng, -3, 3), rng);
    if (!p) throw PreconditionError("sampling: cycle germ cannot reconnect to itself");
    return *p;
}

} // namespace

EpBiSeq random_point(const Sft& x, Rng& rng, std::uint32_t max_cycle) {
    auto cycles = cycle_words(x, max_cycle);
    if (cycles.empty()) cycles = cycle_words(x, x.size());
    const auto& seed_cycle = pick_cycle(cycles, rng);
    // stay inside one strongly connected component so a connection exists
    SccInfo scc = strongly_connected_components(x);
    std::vector<std::vector<Symbol>> pool;
    for (const auto& w : cycles)
        if (scc.component_of[w.front().id] == scc.component_of[seed_cycle.front().id])
            pool.push_back(w);
    return random_point_from(x, pool, rng);
}

EpBiSeq random_point_through(const Sft& x, const std::vector<Symbol>& word, std::int64_t pos,
                             Rng& rng, std::uint32_t max_cycle) {
    if (word.empty()) return random_point(x, rng, max_cycle);
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (!x.allowed(word[i], word[i + 1]))
            throw PreconditionError("random_point_through: word is not a walk");

    auto cycles = cycle_words(x, max_cycle);
    const std::int64_t end = pos + static_cast<std::int64_t>(word.size()); // first index past word

    // right: walk from word.back() onto some cycle
    const std::int64_t cap = 2 * (static_cast<std::int64_t>(x.size()) * x.size() + 8);
    std::optional<EpBiSeq> right_germ;
    std::vector<Symbol> right_fill;
    {
        std::vector<std::size_t> order(cycles.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t oi = 0; oi < order.size() && !right_germ; ++oi) {
            const auto& w = cycles[order[oi]];
            EpBiSeq germ = EpBiSeq::periodic(x.size(), std::vector<Symbol>(w), pick(rng, -3, 3));
            for (std::int64_t n = 0; n <= cap && !right_germ; ++n) {
                auto walk = random_walk_between(x, word.back(), germ.at(end + n), n + 1, rng);
                if (walk) {
                    right_fill.assign(walk->begin() + 1, walk->end() - 1);
                    right_germ = germ;
                }
            }
        }
    }
    // left: walk from some cycle into word.front()
    std::optional<EpBiSeq> left_germ;
    std::vector<Symbol> left_fill;
    {
        std::vector<std::size_t> order(cycles.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t oi = 0; oi < order.size() && !left_germ; ++oi) {
            const auto& w = cycles[order[oi]];
            EpBiSeq germ = EpBiSeq::periodic(x.size(), std::vector<Symbol>(w), pick(rng, -3, 3));
            for (std::int64_t n = 0; n <= cap && !left_germ; ++n) {
                auto walk = random_walk_between(x, germ.at(pos - n - 1), word.front(), n + 1, rng);
                if (walk) {
                    left_fill.assign(walk->begin() + 1, walk->end() - 1);
                    left_germ = germ;
                }
            }
        }
    }
    if (!left_germ || !right_germ)
        throw PreconditionError("random_point_through: word cannot be extended to a point");

    const std::int64_t beta = pos - static_cast<std::int64_t>(left_fill.size());
    std::vector<Symbol> center = left_fill;
    center.insert(center.end(), word.begin(), word.end());
    center.insert(center.end(), right_fill.begin(), right_fill.end());
    return assemble(x, *left_germ, center, *right_germ, beta);
}

EpBiSeq random_point_in_component(const Sft& x, Symbol inside, Rng& rng, std::uint32_t max_cycle) {
    SccInfo scc = strongly_connected_components(x);
    auto cycles = cycle_words(x, std::max(max_cycle, x.size()));
    std::vector<std::vector<Symbol>> local;
    for (const auto& w : cycles)
        if (scc.component_of[w.front().id] == scc.component_of[inside.id]) local.push_back(w);
    return random_point_from(x, local, rng);
}

TsLimitPseudoOrbit random_ts_pseudo_orbit(const Sft& x, Rng& rng, std::int64_t max_cut) {
    EpBiSeq a = random_point(x, rng);
    EpBiSeq b = random_point(x, rng);
    const std::int64_t m = pick(rng, 1, max_cut);
    std::vector<EpBiSeq> middle;
    for (std::int64_t i = 0; i < 2 * m - 1; ++i) middle.push_back(random_point(x, rng));
    return TsLimitPseudoOrbit::make(std::move(a), std::move(b), std::move(middle));
}

FinitePseudoOrbit random_finite_pseudo_orbit(const Sft& x, std::int64_t k, std::size_t length,
                                             Rng& rng) {
    if (k < 1 || length < 2) throw PreconditionError("random pseudo-orbit: k >= 1, length >= 2");
    FinitePseudoOrbit po;
    po.points.push_back(random_point(x, rng));
    while (po.points.size() < length) {
        EpBiSeq next = po.points.back().shifted(1);
        if (pick(rng, 0, 2) != 0) {
            // glitch: keep only the window of radius k-1 and re-route the rest
            std::vector<Symbol> window;
            const std::int64_t lo = -(k - 1);
            for (std::int64_t i = lo; i <= k - 1; ++i) window.push_back(next.at(i));
            next = random_point_through(x, window, lo, rng);
        }
        po.points.push_back(std::move(next));
    }
    po.claimed_delta = DyadicDist::pow2(k);
    return po;
}

FiniteMetricSpace random_metric_space(std::uint32_t n, Rng& rng) {
    std::set<std::pair<std::int64_t, std::int64_t>> grid;
    while (grid.size() < n) grid.emplace(pick(rng, 0, 12), pick(rng, 0, 12));
    std::vector<std::pair<std::int64_t, std::int64_t>> pts(grid.begin(), grid.end());
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<std::vector<BigRat>> table(n, std::vector<BigRat>(n));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            std::uint64_t d = static_cast<std::uint64_t>(std::llabs(pts[i].first - pts[j].first) +
                                                         std::llabs(pts[i].second - pts[j].second));
            table[i][j] = BigRat(d, 1);
        }
    return FiniteMetricSpace::make(std::move(table));
}

TsLimitPseudoOrbit random_full_shift_pseudo_orbit(std::uint32_t n, Rng& rng, std::int64_t max_cut) {
    auto random_word = [&](std::size_t len) {
        std::vector<Symbol> w;
        for (std::size_t i = 0; i < len; ++i)
            w.push_back(Symbol{static_cast<std::uint32_t>(pick(rng, 0, n - 1))});
        return w;
    };
    auto random_pt = [&]() {
        return EpBiSeq::make(n, random_word(static_cast<std::size_t>(pick(rng, 1, 3))),
                             random_word(static_cast<std::size_t>(pick(rng, 0, 4))),
                             random_word(static_cast<std::size_t>(pick(rng, 1, 3))),
                             pick(rng, -3, 3));
    };
    EpBiSeq a = random_pt();
    EpBiSeq b = random_pt();
    const std::int64_t m = pick(rng, 1, max_cut);
    std::vector<EpBiSeq> middle;
    for (std::int64_t i = 0; i < 2 * m - 1; ++i) middle.push_back(random_pt());
    return TsLimitPseudoOrbit::make(std::move(a), std::move(b), std::move(middle));
}

Specification random_specification(const Sft& x, std::int64_t k, std::size_t segments,
                                   std::int64_t max_len, Rng& rng) {
    const std::int64_t spacing = spec_spacing(x, k);
    Specification s;
    std::int64_t a = pick(rng, -5, 5);
    for (std::size_t i = 0; i < segments; ++i) {
        std::int64_t b = a + pick(rng, 0, max_len - 1);
        s.segments.push_back(SpecSegment{a, b, random_point(x, rng)});
        a = b + spacing + pick(rng, 0, 3);
    }
    s.validate();
    return s;
}

} // namespace sft::sampling
