#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "sft/pseudo_orbit.hpp"
#include "sft/sft.hpp"
#include "sft/shadowing.hpp"

namespace sft {

/// Bounds for exhaustive point enumeration. Periods and center sizes follow
/// the canonical description; anchors are confined to a symmetric window so
/// that the enumeration is finite (phase variants of one seam pattern are
/// distinct points and must be cut off somewhere).
struct EnumBounds {
    std::uint32_t max_period = 4;
    std::uint32_t max_center = 8;
    std::int64_t max_anchor = 8;

    /// Bounds guaranteed to contain the given point's canonical description.
    static EnumBounds covering(const EpBiSeq& p, EnumBounds base);
    static EnumBounds covering(const EpBiSeq& p);
};

/// All words of length 1..max_len that read a closed walk (every cyclic
/// adjacent pair allowed), in (length, lexicographic) order.
std::vector<std::vector<Symbol>> cycle_words(const Sft& x, std::uint32_t max_len);

/// Pull-based, restartable stream of every member of X whose canonical
/// description fits the bounds, each exactly once. Candidates are generated
/// as (left cycle word, center walk, right cycle word, anchor) combinations,
/// canonicalized and deduplicated, so everything emitted is a member by
/// construction and nothing within the bounds is missed.
class PointEnumerator {
public:
    PointEnumerator(const Sft& x, EnumBounds bounds);

    std::optional<EpBiSeq> next();
    void reset();

    /// Number of raw candidate tuples the stream walks through, computable
    /// before iterating.
    std::uint64_t raw_candidates() const;

private:
    bool advance();

    const Sft* x_;
    EnumBounds bounds_;
    std::vector<std::vector<Symbol>> cycles_;
    std::vector<std::vector<Symbol>> walks_; // center candidates incl. empty
    std::size_t li_ = 0, ri_ = 0, wi_ = 0;
    std::int64_t anchor_ = 0;
    bool fresh_ = true;
    std::unordered_set<EpBiSeq, EpBiSeqHash> seen_;
};

std::vector<EpBiSeq> enumerate_points(const Sft& x, const EnumBounds& bounds);

/// Exhaustive shadow search over all member points within bounds and all
/// |K| <= gap_bound, minimizing |K| (positive preferred on ties).
///
/// The tails of any verifying point are forced: it must backward-agree with
/// the periodic germ of the left tail of t and forward-agree (after the gap)
/// with the right one. The search therefore scans, for each K, every center
/// length, anchor and connecting walk between those two prescribed germs and
/// keeps whatever canonicalizes inside the bounds — exactly the verifying
/// subset of the enumeration above, without walking the non-verifying bulk.
std::optional<GapShadow> brute_shadow_search(const Sft& x, const TsLimitPseudoOrbit& t,
                                             std::int64_t gap_bound, const EnumBounds& bounds);

/// Every essential SFT over alphabets of size <= k (k <= 3), obtained from
/// all 2^(k^2) transition relations, essentialized, relabeled to 0..n-1 and
/// deduplicated. Deterministic order.
std::vector<Sft> enumerate_sfts(std::uint32_t k);

} // namespace sft
