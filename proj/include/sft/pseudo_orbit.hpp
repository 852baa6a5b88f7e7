#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sft/dyadic.hpp"
#include "sft/point.hpp"
#include "sft/sft.hpp"

namespace sft {

/// Finite pseudo-orbit x^(0), ..., x^(m) with an optional claimed step bound.
struct FinitePseudoOrbit {
    std::vector<EpBiSeq> points;
    std::optional<DyadicDist> claimed_delta;
};

/// max_i d(shift(x^(i), 1), x^(i+1)); zero for a genuine orbit segment.
DyadicDist validate_delta(const std::vector<EpBiSeq>& points);

/// Two-sided limit pseudo-orbit in eventually-orbit form:
///
///     x_i = shift(a, i)  for i <= -m,
///     x_i = middle[i+m-1] for -m < i < m,
///     x_i = shift(b, i)  for i >= m.
///
/// The tails are genuine orbits, so the step errors vanish toward both
/// infinities by construction; only the middle can carry glitches.
class TsLimitPseudoOrbit {
public:
    /// middle.size() must be odd (= 2m-1, m >= 1) and all points must share
    /// the alphabet of a and b.
    static TsLimitPseudoOrbit make(EpBiSeq a, EpBiSeq b, std::vector<EpBiSeq> middle);

    const EpBiSeq& left() const { return left_; }
    const EpBiSeq& right() const { return right_; }
    const std::vector<EpBiSeq>& middle() const { return middle_; }
    std::int64_t cut() const { return cut_; } // m

    EpBiSeq point(std::int64_t i) const;

private:
    TsLimitPseudoOrbit(EpBiSeq a, EpBiSeq b, std::vector<EpBiSeq> middle, std::int64_t cut)
        : left_(std::move(a)), right_(std::move(b)), middle_(std::move(middle)), cut_(cut) {}

    EpBiSeq left_, right_;
    std::vector<EpBiSeq> middle_;
    std::int64_t cut_;
};

/// Checks that every entry of t lies in X; throws PreconditionError.
void validate_members(const Sft& x, const TsLimitPseudoOrbit& t);

} // namespace sft
