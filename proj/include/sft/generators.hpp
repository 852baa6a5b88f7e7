#pragma once

#include <cstdint>

#include "sft/sft.hpp"

namespace sft {

/// The shift presented by two labeled loops through vertex 0: one of length p
/// on vertices 0,...,p-1 and one of length q on vertices 0,p,...,p+q-2, over
/// r = p+q-1 symbols. Requires p, q >= 2 relatively prime (PQNotCoprimeError).
Sft make_pq_shift(std::uint32_t p, std::uint32_t q);

/// Directed n-cycle 0 -> 1 -> ... -> n-1 -> 0.
Sft make_cycle(std::uint32_t n);

/// Full r-shift: complete transition graph with self-loops.
Sft make_full_shift(std::uint32_t r);

/// Vertex shift on {0,1} with the pair (1,1) disallowed.
Sft make_golden_mean();

} // namespace sft
