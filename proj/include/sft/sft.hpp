#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sft/point.hpp"
#include "sft/symbol.hpp"

namespace sft {

/// A memory-1 shift of finite type presented by a directed graph on the
/// alphabet: the allowed-word set is exactly the set of walks, and points of
/// the shift space are the bi-infinite walks.
class Sft {
public:
    Sft(Alphabet alphabet, std::vector<std::pair<Symbol, Symbol>> transitions,
        std::string name = "");

    const Alphabet& alphabet() const { return alphabet_; }
    std::uint32_t size() const { return alphabet_.size(); }
    const std::string& name() const { return name_; }

    bool allowed(Symbol u, Symbol v) const { return adj_[u.id * size() + v.id]; }
    const std::vector<Symbol>& successors(Symbol u) const { return succ_[u.id]; }
    const std::vector<Symbol>& predecessors(Symbol v) const { return pred_[v.id]; }

    /// Transitions in (row, column) order.
    std::vector<std::pair<Symbol, Symbol>> transitions() const;
    std::size_t transition_count() const { return edges_; }

    /// Every symbol has at least one outgoing and one incoming transition.
    bool is_essential() const;

private:
    Alphabet alphabet_;
    std::string name_;
    std::vector<bool> adj_;
    std::vector<std::vector<Symbol>> succ_, pred_;
    std::size_t edges_ = 0;
};

/// Iteratively removes symbols without successors or predecessors until every
/// remaining symbol has both; the surviving graph presents the same bi-infinite
/// shift space. Throws EmptyShiftError when nothing remains.
Sft essentialize(const Sft& x);

/// True iff every adjacent coordinate pair of the point is an allowed
/// transition; decided by scanning one full period on each tail plus the
/// center and seams.
bool member(const Sft& x, const EpBiSeq& p);

} // namespace sft
