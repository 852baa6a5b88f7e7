#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sft/bigrat.hpp"
#include "sft/point.hpp"
#include "sft/pseudo_orbit.hpp"

namespace sft {

/// A finite metric space with exact rational distances, diameter at most 1.
/// Input tables with larger diameter are rescaled and the factor recorded.
class FiniteMetricSpace {
public:
    /// Validates symmetry, zero diagonal, positivity off the diagonal and the
    /// triangle inequality; throws PreconditionError on violations.
    static FiniteMetricSpace make(std::vector<std::vector<BigRat>> table);

    std::uint32_t size() const { return n_; }
    const BigRat& dist(std::uint32_t i, std::uint32_t j) const { return table_[i * n_ + j]; }
    const BigRat& dist(Symbol a, Symbol b) const { return dist(a.id, b.id); }

    /// The diameter the input table had; entries were divided by it when it
    /// exceeded 1.
    const BigRat& original_diameter() const { return original_diameter_; }
    bool rescaled() const { return rescaled_; }

private:
    std::uint32_t n_ = 0;
    std::vector<BigRat> table_;
    BigRat original_diameter_;
    bool rescaled_ = false;
};

/// Exact value of the weighted product metric
/// D(x, y) = sup_j d(x_j, y_j) / 2^|j| on the full shift over the space.
/// The sup is attained inside a finite window: weights decay away from 0 and
/// the coordinate pattern is eventually periodic on both sides.
using WeightedDist = BigRat;
WeightedDist metric_D(const FiniteMetricSpace& space, const EpBiSeq& x, const EpBiSeq& y);

/// The diagonal point x with x_j = (j-th pseudo-orbit entry)_0; eventually
/// periodic because the pseudo-orbit tails are orbits of eventually periodic
/// points. Defined over the full shift, no transition constraints.
EpBiSeq diagonal_shadow(const TsLimitPseudoOrbit& t);

/// Result of checking the decay bound D(sigma^m x, x^(m)) <= 2^-p for all
/// |m| >= n_p. The cutoff n_p is the least index past which the step errors
/// stay below 2^-(p+1), plus p more when that index is positive: sup terms
/// that reach across the middle of the pseudo-orbit carry weight at most
/// 2^-(|m| - cutoff) and need the extra allowance.
struct DecayCheck {
    bool ok = false;
    std::int64_t n_p = 0;               // sound cutoff derived from step errors
    std::int64_t checked_up_to = 0;     // decidability horizon actually scanned
    std::optional<std::int64_t> violating_m;
    std::int64_t minimal_n_p = 0;       // empirically smallest index that works
};

/// Exact decision: the scan runs to a horizon past which the compared
/// coordinate pairs lie in matching periodic tails and every weighted term is
/// strictly below 2^-p, so no violation can hide beyond it.
DecayCheck verify_decay(const FiniteMetricSpace& space, const TsLimitPseudoOrbit& t,
                        const EpBiSeq& x, std::int64_t p);

} // namespace sft
