#include "sft/pseudo_orbit.hpp"

#include "sft/errors.hpp"

namespace sft {

DyadicDist validate_delta(const std::vector<EpBiSeq>& points) {
    if (points.size() < 2) throw PreconditionError("validate_delta: need at least two points");
    DyadicDist worst = DyadicDist::zero();
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        DyadicDist step = dist(points[i].shifted(1), points[i + 1]);
        if (step > worst) worst = step;
    }
    return worst;
}

TsLimitPseudoOrbit TsLimitPseudoOrbit::make(EpBiSeq a, EpBiSeq b, std::vector<EpBiSeq> middle) {
    if (middle.empty() || middle.size() % 2 == 0)
        throw PreconditionError("ts pseudo-orbit: middle must hold 2m-1 points, m >= 1");
    for (const auto& p : middle)
        if (p.alphabet_size() != a.alphabet_size())
            throw AlphabetMismatchError("ts pseudo-orbit: mixed alphabets");
    if (a.alphabet_size() != b.alphabet_size())
        throw AlphabetMismatchError("ts pseudo-orbit: mixed alphabets");
    const auto cut = static_cast<std::int64_t>(middle.size() + 1) / 2;
    return TsLimitPseudoOrbit(std::move(a), std::move(b), std::move(middle), cut);
}

EpBiSeq TsLimitPseudoOrbit::point(std::int64_t i) const {
    if (i <= -cut_) return left_.shifted(i);
    if (i >= cut_) return right_.shifted(i);
    return middle_[static_cast<std::size_t>(i + cut_ - 1)];
}

void validate_members(const Sft& x, const TsLimitPseudoOrbit& t) {
    if (!member(x, t.left()))
        throw PreconditionError("ts pseudo-orbit: left tail point outside the SFT");
    if (!member(x, t.right()))
        throw PreconditionError("ts pseudo-orbit: right tail point outside the SFT");
    for (const auto& p : t.middle())
        if (!member(x, p)) throw PreconditionError("ts pseudo-orbit: middle point outside the SFT");
}

} // namespace sft
