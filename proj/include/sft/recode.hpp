#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "sft/sft.hpp"

namespace sft {

/// An SFT together with shift-commuting coding maps to and from the
/// presentation it was derived from.
struct CodedSft {
    Sft sft;
    std::function<EpBiSeq(const EpBiSeq&)> encode; // original point -> coded point
    std::function<EpBiSeq(const EpBiSeq&)> decode; // coded point -> original point
};

/// Converts a finite-type presentation (alphabet + forbidden words of length
/// <= W) into a memory-1 vertex shift on allowed (W-1)-blocks, W = max(2, max
/// forbidden length). encode reads overlapping blocks, decode projects to the
/// first coordinate; both commute with the shift. Throws EmptyShiftError when
/// the constraints kill everything.
CodedSft higher_block_recode(const Alphabet& alphabet,
                             const std::vector<std::vector<Symbol>>& forbidden);

/// Componentwise product with splitting/joining coding maps.
struct ProductSft {
    Sft sft;
    std::function<EpBiSeq(const EpBiSeq&, const EpBiSeq&)> join;
    std::function<std::pair<EpBiSeq, EpBiSeq>(const EpBiSeq&)> split;
};

ProductSft product(const Sft& x1, const Sft& x2);

/// The n-block power shift conjugating (X, sigma^n): symbols are the allowed
/// n-blocks, transitions are n-step concatenations; encode groups coordinates
/// on the block grid at multiples of n, so
/// decode(shift(encode(x), 1)) == shift(x, n).
CodedSft power_shift(const Sft& x, std::uint32_t n);

} // namespace sft
