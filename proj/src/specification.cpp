#include "sft/specification.hpp"

#include <algorithm>
#include <memory>

#include "sft/analysis.hpp"
#include "sft/errors.hpp"

namespace sft {

void Specification::validate() const {
    if (segments.empty()) throw PreconditionError("specification: needs at least one segment");
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (segments[i].a > segments[i].b)
            throw PreconditionError("specification: segment with a > b");
        if (i > 0 && segments[i].a <= segments[i - 1].b)
            throw PreconditionError("specification: intervals must be disjoint and ordered");
    }
}

std::int64_t spec_spacing(const Sft& x, std::int64_t k) {
    if (k < 0) throw PreconditionError("spec_spacing: eps exponent must be nonnegative");
    return static_cast<std::int64_t>(transition_length(x)) + 2 * (k + 1);
}

EpBiSeq shadow_specification(const Sft& x, const Specification& s, std::int64_t k, bool periodic) {
    s.validate();
    CyclicDecomposition d = period_and_classes(x);
    if (!d.mixing) throw NotMixingError("shadow_specification: SFT is not mixing");
    for (const auto& seg : s.segments)
        if (!member(x, seg.point))
            throw PreconditionError("shadow_specification: segment point outside the SFT");

    const std::int64_t spacing = spec_spacing(x, k);
    for (std::size_t i = 0; i + 1 < s.segments.size(); ++i) {
        if (s.segments[i + 1].a - s.segments[i].b < spacing)
            throw SpacingTooSmallError("shadow_specification: segments closer than L(eps) = " +
                                       std::to_string(spacing));
    }

    const std::int64_t g = k + 1; // copied margin around each block
    const auto& segs = s.segments;
    const std::size_t m = segs.size();

    // connecting words between consecutive extended blocks
    auto connectors = std::make_shared<std::vector<std::vector<Symbol>>>();
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const std::int64_t from_pos = segs[i].b + g;
        const std::int64_t to_pos = segs[i + 1].a - g;
        auto res = connect_path(x, segs[i].point.at(from_pos), segs[i + 1].point.at(to_pos),
                                to_pos - from_pos);
        auto* word = std::get_if<std::vector<Symbol>>(&res);
        if (!word)
            throw std::logic_error("shadow_specification: mixing SFT refused a connecting path");
        connectors->push_back(std::move(*word));
    }

    auto block_sample = [&segs, connectors, g, m](std::int64_t t) -> Symbol {
        // zones, left to right: block 1 (incl. left extension), connector 1,
        // block 2, ..., block m (incl. right extension)
        if (t <= segs[0].b + g) return segs[0].point.at(t);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            const std::int64_t gap_start = segs[i].b + g;
            const std::int64_t gap_end = segs[i + 1].a - g;
            if (t < gap_end) return (*connectors)[i][static_cast<std::size_t>(t - gap_start)];
            if (t <= segs[i + 1].b + g) return segs[i + 1].point.at(t);
        }
        return segs[m - 1].point.at(t);
    };

    if (!periodic) {
        const EpBiSeq& first = segs.front().point;
        const EpBiSeq& last = segs.back().point;
        const std::int64_t left_end = std::min(segs.front().a - g, first.anchor());
        const std::int64_t right_begin = std::max(segs.back().b + g, last.center_end());
        EpBiSeq y = EpBiSeq::from_samples(x.size(), block_sample, left_end,
                                          static_cast<std::uint32_t>(first.left_period().size()),
                                          right_begin,
                                          static_cast<std::uint32_t>(last.right_period().size()));
        if (!member(x, y)) throw std::logic_error("shadow_specification: shadow left the shift");
        return y;
    }

    // periodic variant: one fundamental window of length b_m - a_1 + L,
    // closed by a final connector of length exactly transition_length
    const std::int64_t length = s.last_end() - s.first_start() + spacing;
    const std::int64_t start = segs.front().a - g;
    const std::int64_t close_from = segs.back().b + g;
    const std::int64_t close_len = length - (close_from - start);
    auto res = connect_path(x, segs.back().point.at(close_from), segs.front().point.at(start),
                            close_len);
    auto* close_word = std::get_if<std::vector<Symbol>>(&res);
    if (!close_word)
        throw std::logic_error("shadow_specification: mixing SFT refused the closing path");

    std::vector<Symbol> word;
    word.reserve(static_cast<std::size_t>(length));
    for (std::int64_t t = start; t < close_from; ++t) word.push_back(block_sample(t));
    for (std::size_t i = 0; i + 1 < close_word->size(); ++i) word.push_back((*close_word)[i]);
    EpBiSeq y = EpBiSeq::periodic(x.size(), std::move(word), start);
    if (!member(x, y)) throw std::logic_error("shadow_specification: periodic shadow left the shift");
    return y;
}

} // namespace sft
