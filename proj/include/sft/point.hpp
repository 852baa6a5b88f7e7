#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sft/dyadic.hpp"
#include "sft/symbol.hpp"

namespace sft {

/// A bi-infinite symbol sequence that is eventually periodic in both
/// directions, stored as
///
///     ... L L L | center | R R R ...
///
/// where the left period word L tiles all indices below the anchor, the
/// center occupies [anchor, anchor + |center|) and the right period word R
/// tiles everything above. Construction canonicalizes: period words are
/// reduced to their primitive roots, the center is absorbed maximally into
/// both tails, and a fully periodic sequence is re-anchored at index 0 with
/// equal period words. Two EpBiSeq denote the same sequence iff their
/// canonical fields are identical, so operator== is plain field comparison.
class EpBiSeq {
public:
    /// Builds and canonicalizes. The period words must be nonempty and all
    /// symbol ids must be below alphabet_size.
    static EpBiSeq make(std::uint32_t alphabet_size,
                        std::vector<Symbol> left_period,
                        std::vector<Symbol> center,
                        std::vector<Symbol> right_period,
                        std::int64_t anchor);

    /// The constant sequence ...sss...
    static EpBiSeq constant(std::uint32_t alphabet_size, Symbol s);

    /// The periodic sequence with word[i mod p] at index phase + i.
    static EpBiSeq periodic(std::uint32_t alphabet_size,
                            std::vector<Symbol> word,
                            std::int64_t phase = 0);

    /// Builds from coordinate samples: sample(i) must be left_period-periodic
    /// for i < left_end and right_period-periodic for i >= right_begin.
    static EpBiSeq from_samples(std::uint32_t alphabet_size,
                                const std::function<Symbol(std::int64_t)>& sample,
                                std::int64_t left_end,
                                std::uint32_t left_period,
                                std::int64_t right_begin,
                                std::uint32_t right_period);

    /// Coordinate access, total over all of Z.
    Symbol at(std::int64_t i) const;

    /// The shifted sequence y with y_i = x_{i+k}.
    EpBiSeq shifted(std::int64_t k) const;

    std::uint32_t alphabet_size() const { return alphabet_size_; }
    const std::vector<Symbol>& left_period() const { return left_; }
    const std::vector<Symbol>& center() const { return center_; }
    const std::vector<Symbol>& right_period() const { return right_; }

    /// First index of the center block (== center_end() when it is empty).
    std::int64_t anchor() const { return anchor_; }
    /// First index of the pure right tail.
    std::int64_t center_end() const { return anchor_ + static_cast<std::int64_t>(center_.size()); }

    /// True for a sequence that is periodic (canonical form: empty center,
    /// equal period words, anchor 0).
    bool is_periodic() const;

    bool operator==(const EpBiSeq& o) const = default;
    std::size_t hash() const;

    /// Size of the canonical description, |L| + |center| + |R|.
    std::size_t description_size() const { return left_.size() + center_.size() + right_.size(); }

private:
    EpBiSeq() = default;
    void canonicalize();

    std::uint32_t alphabet_size_ = 0;
    std::vector<Symbol> left_, center_, right_;
    std::int64_t anchor_ = 0;
};

struct EpBiSeqHash {
    std::size_t operator()(const EpBiSeq& p) const { return p.hash(); }
};

/// d(x,y) = 2^{-min{|i| : x_i != y_i}}, zero iff x == y. Decided exactly on
/// the canonical forms. Throws AlphabetMismatchError.
DyadicDist dist(const EpBiSeq& x, const EpBiSeq& y);

enum class Direction { Forward, Backward };

/// Witness of eventual coordinate agreement: Forward means x_i == y_i for
/// all i >= sync_index, Backward means agreement for all i <= -sync_index.
/// The returned index is tight (one past the last disagreement), 0 when the
/// sequences are equal.
struct SyncWitness {
    Direction direction;
    std::int64_t sync_index;
};

/// Decides y in W^s(x) (Forward) or y in W^u(x) (Backward): with the
/// symbolic metric, asymptotic convergence of the orbits is exactly eventual
/// coordinate agreement, which is a finite check on periodic tails.
std::optional<SyncWitness> tail_sync(const EpBiSeq& x, const EpBiSeq& y, Direction dir);

} // namespace sft
