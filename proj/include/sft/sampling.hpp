#pragma once

#include <cstdint>
#include <random>

#include "sft/metric_space.hpp"
#include "sft/pseudo_orbit.hpp"
#include "sft/sft.hpp"
#include "sft/specification.hpp"

namespace sft::sampling {

/// All randomness in experiments flows through an explicitly seeded engine;
/// identical seeds reproduce identical data.
using Rng = std::mt19937_64;

/// A member point with both tails on (uniformly chosen) cycles of length at
/// most max_cycle and a connecting center. Works on any essential SFT; on a
/// non-transitive one both tails land on the same cycle.
EpBiSeq random_point(const Sft& x, Rng& rng, std::uint32_t max_cycle = 3);

/// A member point whose coordinates on [pos, pos + word.size()) equal the
/// given allowed word.
EpBiSeq random_point_through(const Sft& x, const std::vector<Symbol>& word, std::int64_t pos,
                             Rng& rng, std::uint32_t max_cycle = 3);

/// A member point with both tails inside the strongly connected component of
/// the given symbol.
EpBiSeq random_point_in_component(const Sft& x, Symbol inside, Rng& rng,
                                  std::uint32_t max_cycle = 3);

TsLimitPseudoOrbit random_ts_pseudo_orbit(const Sft& x, Rng& rng, std::int64_t max_cut = 3);

/// A finite pseudo-orbit of the given length with every step error at most
/// 2^-k (agreement windows of radius k-1 around the origin).
FinitePseudoOrbit random_finite_pseudo_orbit(const Sft& x, std::int64_t k, std::size_t length,
                                             Rng& rng);

/// A random metric space with exact rational distances: distinct points on a
/// small integer grid under the taxicab metric, scaled to diameter <= 1.
FiniteMetricSpace random_metric_space(std::uint32_t n, Rng& rng);

/// Random over the full shift on n letters (no transition constraints).
TsLimitPseudoOrbit random_full_shift_pseudo_orbit(std::uint32_t n, Rng& rng,
                                                  std::int64_t max_cut = 3);

/// An L(eps)-spaced specification with the given number of segments, segment
/// lengths at most max_len, eps = 2^-k.
Specification random_specification(const Sft& x, std::int64_t k, std::size_t segments,
                                   std::int64_t max_len, Rng& rng);

} // namespace sft::sampling
