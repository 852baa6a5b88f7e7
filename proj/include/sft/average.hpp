#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sft/bigrat.hpp"
#include "sft/point.hpp"

namespace sft {

/// Finite-horizon average-shadowing diagnostics, all entries exact rationals.
/// No asymptotic claim is decided here: limsup conditions are not decidable
/// from finite data, so the report carries trend evidence only.
struct AverageReport {
    std::int64_t horizon;

    /// max over admissible starts K of (1/n) sum_{i<n} d(f(x_{K+i}), x_{K+i+1}).
    BigRat worst_window_average;

    /// Cesaro averages (1/j) sum_{i<j} d(f^i(y), x_i) for j = 1..n when a
    /// candidate y was supplied; empty otherwise.
    std::vector<BigRat> running_tracing_average;
};

/// Requires points.size() >= horizon + 1 (one full window of step errors);
/// throws HorizonTooLongError.
AverageReport average_report(const std::vector<EpBiSeq>& points,
                             const std::optional<EpBiSeq>& candidate, std::int64_t horizon);

} // namespace sft
