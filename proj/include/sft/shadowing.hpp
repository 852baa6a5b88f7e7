#pragma once

#include <cstdint>

#include "sft/pseudo_orbit.hpp"
#include "sft/sft.hpp"

namespace sft {

/// Result of finite shadowing: a true orbit point together with the exact
/// worst tracing distance.
struct FiniteShadow {
    EpBiSeq point;
    DyadicDist eps;
};

/// Diagonal shadowing of a finite pseudo-orbit: y_j = x^(j)_0 on the orbit
/// window, extended left by x^(0) and right by x^(m). Requires a step bound
/// of at most 2^-1 — adjacent diagonal letters are then allowed pairs, so y
/// stays in X (DeltaTooLargeError otherwise). The returned eps is
/// max_i d(shift(y, i), x^(i)) computed exactly, and never exceeds the step
/// bound.
FiniteShadow shadow_finite(const Sft& x, const FinitePseudoOrbit& po);

/// A heteroclinic connection z in W^u(source) with shift(z, gap) in
/// W^s(target): backward asymptotic to source, forward asymptotic to
/// shift(target, -gap). The gap is forced mod N by the cyclic classes of the
/// two points; the representative with minimal absolute value is chosen
/// (positive on ties), so |gap| <= floor(N/2) <= N-1.
struct Heteroclinic {
    EpBiSeq point;
    std::int64_t gap;
};

Heteroclinic connect_heteroclinic(const Sft& x, const EpBiSeq& target, const EpBiSeq& source);

/// A point together with the gap it shadows a two-sided limit pseudo-orbit
/// with: d(sigma^i y, x_i) -> 0 as i -> -infinity and
/// d(sigma^{K+i} y, x_i) -> 0 as i -> +infinity.
struct GapShadow {
    EpBiSeq point;
    std::int64_t gap;
};

/// Synthesizes a gap shadow for t over a transitive SFT; the gap depends only
/// on the residue class of the phase mismatch between the two tails and is 0
/// on mixing SFTs. Throws NotTransitiveError.
GapShadow two_sided_limit_shadow(const Sft& x, const TsLimitPseudoOrbit& t);

/// Exact decision of the shadowing relation: y backward-syncs with the left
/// tail orbit and shift(y, gap) forward-syncs with the right tail orbit.
bool verify_two_sided(const TsLimitPseudoOrbit& t, const EpBiSeq& y, std::int64_t gap);

/// A finite delta-pseudo-orbit from `from` to `to`, both endpoints exact:
/// an initial true orbit segment of `from`, a middle orbit segment of a
/// heteroclinic point between the tail cycles, and a final orbit segment
/// into `to`, with all three seams below delta. Throws NotTransitiveError.
FinitePseudoOrbit chain_connect(const Sft& x, const EpBiSeq& from, const EpBiSeq& to,
                                DyadicDist delta);

/// Smallest G such that every two-sided limit pseudo-orbit is shadowed with
/// some |K| <= G: the worst-case minimal-representative over all phase
/// residues, floor(N/2). Zero iff mixing. Throws NotTransitiveError.
std::int64_t minimal_gap(const Sft& x);

} // namespace sft
