#include "sft/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "sft/analysis.hpp"
#include "sft/errors.hpp"

namespace sft {

EnumBounds EnumBounds::covering(const EpBiSeq& p) { return covering(p, EnumBounds{}); }

EnumBounds EnumBounds::covering(const EpBiSeq& p, EnumBounds base) {
    base.max_period = std::max<std::uint32_t>(
        {base.max_period, static_cast<std::uint32_t>(p.left_period().size()),
         static_cast<std::uint32_t>(p.right_period().size())});
    base.max_center = std::max(base.max_center, static_cast<std::uint32_t>(p.center().size()));
    base.max_anchor = std::max<std::int64_t>(base.max_anchor, std::llabs(p.anchor()));
    return base;
}

std::vector<std::vector<Symbol>> cycle_words(const Sft& x, std::uint32_t max_len) {
    std::vector<std::vector<Symbol>> out;
    std::vector<Symbol> cur;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t len) {
        if (cur.size() == len) {
            if (x.allowed(cur.back(), cur.front())) out.push_back(cur);
            return;
        }
        if (cur.empty()) {
            for (std::uint32_t s = 0; s < x.size(); ++s) {
                cur.push_back(Symbol{s});
                rec(len);
                cur.pop_back();
            }
        } else {
            for (Symbol s : x.successors(cur.back())) {
                cur.push_back(s);
                rec(len);
                cur.pop_back();
            }
        }
    };
    for (std::uint32_t len = 1; len <= max_len; ++len) rec(len);
    return out;
}

namespace {

// All walk words of length 0..max_len (the empty walk included).
std::vector<std::vector<Symbol>> walk_words(const Sft& x, std::uint32_t max_len) {
    std::vector<std::vector<Symbol>> out{{}};
    std::vector<Symbol> cur;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t len) {
        if (cur.size() == len) {
            out.push_back(cur);
            return;
        }
        if (cur.empty()) {
            for (std::uint32_t s = 0; s < x.size(); ++s) {
                cur.push_back(Symbol{s});
                rec(len);
                cur.pop_back();
            }
        } else {
            for (Symbol s : x.successors(cur.back())) {
                cur.push_back(s);
                rec(len);
                cur.pop_back();
            }
        }
    };
    for (std::uint32_t len = 1; len <= max_len; ++len) rec(len);
    return out;
}

} // namespace

PointEnumerator::PointEnumerator(const Sft& x, EnumBounds bounds)
    : x_(&x), bounds_(bounds), cycles_(cycle_words(x, bounds.max_period)),
      walks_(walk_words(x, bounds.max_center)) {
    reset();
}

void PointEnumerator::reset() {
    li_ = ri_ = wi_ = 0;
    anchor_ = -bounds_.max_anchor;
    fresh_ = true;
    seen_.clear();
}

std::uint64_t PointEnumerator::raw_candidates() const {
    return static_cast<std::uint64_t>(cycles_.size()) * cycles_.size() * walks_.size() *
           static_cast<std::uint64_t>(2 * bounds_.max_anchor + 1);
}

bool PointEnumerator::advance() {
    if (li_ >= cycles_.size()) return false; // exhausted
    if (fresh_) {
        fresh_ = false;
        return true;
    }
    if (++anchor_ <= bounds_.max_anchor) return true;
    anchor_ = -bounds_.max_anchor;
    if (++wi_ < walks_.size()) return true;
    wi_ = 0;
    if (++ri_ < cycles_.size()) return true;
    ri_ = 0;
    return ++li_ < cycles_.size();
}

std::optional<EpBiSeq> PointEnumerator::next() {
    while (advance()) {
        const auto& left = cycles_[li_];
        const auto& right = cycles_[ri_];
        const auto& center = walks_[wi_];
        // seams: left tiling ends with left.back() at anchor-1
        Symbol exit = left.back();
        Symbol entry = right.front();
        if (center.empty()) {
            if (!x_->allowed(exit, entry)) continue;
        } else {
            if (!x_->allowed(exit, center.front())) continue;
            if (!x_->allowed(center.back(), entry)) continue;
        }
        EpBiSeq p = EpBiSeq::make(x_->size(), left, center, right, anchor_);
        if (p.left_period().size() > bounds_.max_period ||
            p.right_period().size() > bounds_.max_period ||
            p.center().size() > bounds_.max_center || std::llabs(p.anchor()) > bounds_.max_anchor)
            continue;
        if (!seen_.insert(p).second) continue;
        if (!member(*x_, p)) continue;
        return p;
    }
    return std::nullopt;
}

std::vector<EpBiSeq> enumerate_points(const Sft& x, const EnumBounds& bounds) {
    PointEnumerator en(x, bounds);
    std::vector<EpBiSeq> out;
    while (auto p = en.next()) out.push_back(std::move(*p));
    return out;
}

namespace {

// The periodic germ of the left tail of p (the unique pure periodic point
// agreeing with p toward -infinity) and of the right tail.
EpBiSeq left_tail_germ(const EpBiSeq& p) {
    return EpBiSeq::periodic(p.alphabet_size(), std::vector<Symbol>(p.left_period()),
                             p.anchor() - static_cast<std::int64_t>(p.left_period().size()));
}

EpBiSeq right_tail_germ(const EpBiSeq& p) {
    return EpBiSeq::periodic(p.alphabet_size(), std::vector<Symbol>(p.right_period()),
                             p.center_end());
}

} // namespace

std::optional<GapShadow> brute_shadow_search(const Sft& x, const TsLimitPseudoOrbit& t,
                                             std::int64_t gap_bound, const EnumBounds& bounds) {
    if (gap_bound < 0) throw PreconditionError("brute_shadow_search: negative gap bound");
    const EpBiSeq germ_left = left_tail_germ(t.left());
    const EpBiSeq germ_right_base = right_tail_germ(t.right());
    if (germ_left.right_period().size() > bounds.max_period ||
        germ_right_base.right_period().size() > bounds.max_period)
        return std::nullopt; // forced tails do not fit the bounds

    // |K| ascending, positive before negative
    std::vector<std::int64_t> gaps{0};
    for (std::int64_t k = 1; k <= gap_bound; ++k) {
        gaps.push_back(k);
        gaps.push_back(-k);
    }

    for (std::int64_t gap : gaps) {
        const EpBiSeq germ_right = germ_right_base.shifted(-gap);
        for (std::uint32_t n = 0; n <= bounds.max_center; ++n) {
            for (std::int64_t beta = -bounds.max_anchor; beta <= bounds.max_anchor; ++beta) {
                const std::int64_t gamma = beta + n;
                // all center walks from the left germ into the right germ
                std::vector<Symbol> center(n, Symbol{0});
                std::function<std::optional<EpBiSeq>(std::uint32_t)> dfs =
                    [&](std::uint32_t depth) -> std::optional<EpBiSeq> {
                    Symbol prev = depth == 0 ? germ_left.at(beta - 1) : center[depth - 1];
                    if (depth == n) {
                        if (!x.allowed(prev, germ_right.at(gamma))) return std::nullopt;
                        auto sample = [&](std::int64_t i) -> Symbol {
                            if (i < beta) return germ_left.at(i);
                            if (i >= gamma) return germ_right.at(i);
                            return center[static_cast<std::size_t>(i - beta)];
                        };
                        EpBiSeq y = EpBiSeq::from_samples(
                            x.size(), sample, beta,
                            static_cast<std::uint32_t>(germ_left.right_period().size()), gamma,
                            static_cast<std::uint32_t>(germ_right.right_period().size()));
                        if (y.left_period().size() > bounds.max_period ||
                            y.right_period().size() > bounds.max_period ||
                            y.center().size() > bounds.max_center ||
                            std::llabs(y.anchor()) > bounds.max_anchor)
                            return std::nullopt;
                        if (!member(x, y)) return std::nullopt;
                        if (!verify_two_sided(t, y, gap)) return std::nullopt;
                        return y;
                    }
                    for (Symbol s : x.successors(prev)) {
                        center[depth] = s;
                        if (auto hit = dfs(depth + 1)) return hit;
                    }
                    return std::nullopt;
                };
                if (auto hit = dfs(0)) return GapShadow{std::move(*hit), gap};
            }
        }
    }
    return std::nullopt;
}

std::vector<Sft> enumerate_sfts(std::uint32_t k) {
    if (k == 0 || k > 3) throw PreconditionError("enumerate_sfts: alphabet size must be 1..3");
    std::vector<Sft> out;
    std::map<std::string, bool> seen;
    const std::uint32_t bits = k * k;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << bits); ++mask) {
        std::vector<std::pair<Symbol, Symbol>> edges;
        for (std::uint32_t b = 0; b < bits; ++b)
            if (mask & (std::uint64_t(1) << b)) edges.emplace_back(Symbol{b / k}, Symbol{b % k});
        Sft raw(Alphabet::indexed(k), std::move(edges));
        try {
            Sft ess = essentialize(raw);
            std::string key = std::to_string(ess.size()) + ":";
            for (auto [u, v] : ess.transitions())
                key += std::to_string(u.id) + ">" + std::to_string(v.id) + ";";
            if (seen.emplace(key, true).second) out.push_back(std::move(ess));
        } catch (const EmptyShiftError&) {
        }
    }
    return out;
}

} // namespace sft
