#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "sft/sft.hpp"

namespace sft {

/// Strongly connected components, indexed in discovery order.
struct SccInfo {
    std::vector<std::uint32_t> component_of; // symbol id -> component index
    std::vector<std::vector<Symbol>> components;
};

SccInfo strongly_connected_components(const Sft& x);

/// Spectral decomposition data: the period N of (the designated component of)
/// the SFT and the cyclic classes B_0,...,B_{N-1}, every transition advancing
/// the class by one mod N.
///
/// For a non-transitive SFT the top-level period and classes describe the
/// largest essential component (most symbols, lowest symbol id on ties);
/// class_of is empty off that component. Per-component periods are always
/// available in the table.
struct CyclicDecomposition {
    bool transitive = false;
    bool mixing = false;
    std::uint32_t period = 1;
    std::vector<std::optional<std::uint32_t>> class_of;

    struct ComponentPeriod {
        std::vector<Symbol> members;
        std::uint32_t period;  // 0 for a cycle-free component
        bool essential;        // contains at least one cycle
    };
    std::vector<ComponentPeriod> table;
    std::uint32_t designated_component = 0;
};

/// Requires an essential SFT (throws PreconditionError otherwise).
CyclicDecomposition period_and_classes(const Sft& x);

/// Least T >= 0 such that every ordered symbol pair is joined by a path of
/// every length n >= T. Exists iff the SFT is mixing; the scan is capped by
/// the Wielandt bound (|V|-1)^2 + 1. Throws NotMixingError.
std::uint32_t transition_length(const Sft& x);

/// Which path lengths join u to v: below the threshold exactly the listed
/// lengths occur; from the threshold on, every length congruent to residue
/// mod period occurs (meaningful when u, v lie in one strongly connected
/// component; residue/threshold are absent otherwise or when unreachable).
struct PathSpectrum {
    Symbol from, to;
    bool reachable = false;
    std::uint32_t period = 1;
    std::optional<std::uint32_t> residue;
    std::optional<std::int64_t> threshold;
    std::vector<std::int64_t> lengths_below;
};

PathSpectrum path_spectrum(const Sft& x, Symbol u, Symbol v);

/// A word w_0 ... w_n with w_0 = u, w_n = v and every adjacent pair allowed,
/// or the spectrum explaining why length n is infeasible.
std::variant<std::vector<Symbol>, PathSpectrum> connect_path(const Sft& x, Symbol u, Symbol v,
                                                             std::int64_t n);

/// Topological entropy: log of the Perron eigenvalue of the transition
/// matrix, by power iteration on A^N per component (relative tolerance 1e-12,
/// deterministic all-ones start). Requires an essential SFT.
double entropy(const Sft& x);

} // namespace sft
