#pragma once

#include <cstdint>
#include <vector>

#include "sft/point.hpp"
#include "sft/sft.hpp"

namespace sft {

/// One specification segment: the orbit assignment P(t) = shift(point, t) on
/// the interval [a, b].
struct SpecSegment {
    std::int64_t a, b;
    EpBiSeq point;
};

/// A specification (tau, P): disjoint ordered intervals I_i = [a_i, b_i] with
/// orbit-consistent assignments, orbit consistency holding by construction.
struct Specification {
    std::vector<SpecSegment> segments;

    /// Validates a_1 <= b_1 < a_2 <= ... ; throws PreconditionError.
    void validate() const;
    std::int64_t first_start() const { return segments.front().a; }
    std::int64_t last_end() const { return segments.back().b; }
};

/// Spacing L(eps) sufficient for eps = 2^-k shadowing: transition_length(X) +
/// 2(k+1). Every orbit block extended by k+1 coordinates on both sides pins
/// the shadow within 2^-(k+1), and the remaining gap length is at least the
/// transition length, so a connecting path of exactly that length exists.
std::int64_t spec_spacing(const Sft& x, std::int64_t k);

/// A point y with d(shift(y, n), P(n)) < 2^-k for every specified n. With
/// periodic set, y additionally satisfies shift(y, b_m - a_1 + L) == y
/// exactly, L = spec_spacing(x, k). Throws SpacingTooSmallError /
/// NotMixingError.
EpBiSeq shadow_specification(const Sft& x, const Specification& s, std::int64_t k, bool periodic);

} // namespace sft
