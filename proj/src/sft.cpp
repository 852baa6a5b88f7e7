#include "sft/sft.hpp"

#include <algorithm>

#include "sft/errors.hpp"

namespace sft {

Sft::Sft(Alphabet alphabet, std::vector<std::pair<Symbol, Symbol>> transitions, std::string name)
    : alphabet_(std::move(alphabet)), name_(std::move(name)) {
    const std::uint32_t n = alphabet_.size();
    adj_.assign(static_cast<std::size_t>(n) * n, false);
    succ_.assign(n, {});
    pred_.assign(n, {});
    for (auto [u, v] : transitions) {
        if (u.id >= n || v.id >= n) throw PreconditionError("transition symbol beyond alphabet");
        std::size_t idx = static_cast<std::size_t>(u.id) * n + v.id;
        if (adj_[idx]) continue;
        adj_[idx] = true;
        ++edges_;
    }
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = 0; v < n; ++v)
            if (adj_[static_cast<std::size_t>(u) * n + v]) {
                succ_[u].push_back(Symbol{v});
                pred_[v].push_back(Symbol{u});
            }
}

std::vector<std::pair<Symbol, Symbol>> Sft::transitions() const {
    std::vector<std::pair<Symbol, Symbol>> out;
    out.reserve(edges_);
    for (std::uint32_t u = 0; u < size(); ++u)
        for (Symbol v : succ_[u]) out.emplace_back(Symbol{u}, v);
    return out;
}

bool Sft::is_essential() const {
    for (std::uint32_t u = 0; u < size(); ++u)
        if (succ_[u].empty() || pred_[u].empty()) return false;
    return size() > 0;
}

Sft essentialize(const Sft& x) {
    const std::uint32_t n = x.size();
    std::vector<bool> alive(n, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint32_t u = 0; u < n; ++u) {
            if (!alive[u]) continue;
            bool has_succ = false, has_pred = false;
            for (Symbol v : x.successors(Symbol{u}))
                if (alive[v.id]) { has_succ = true; break; }
            for (Symbol v : x.predecessors(Symbol{u}))
                if (alive[v.id]) { has_pred = true; break; }
            if (!has_succ || !has_pred) {
                alive[u] = false;
                changed = true;
            }
        }
    }
    std::vector<std::string> labels;
    std::vector<std::uint32_t> remap(n, 0);
    for (std::uint32_t u = 0; u < n; ++u) {
        if (alive[u]) {
            remap[u] = static_cast<std::uint32_t>(labels.size());
            labels.push_back(x.alphabet().label(Symbol{u}));
        }
    }
    if (labels.empty()) throw EmptyShiftError("essentialize: presentation admits no bi-infinite walk");
    std::vector<std::pair<Symbol, Symbol>> edges;
    for (std::uint32_t u = 0; u < n; ++u) {
        if (!alive[u]) continue;
        for (Symbol v : x.successors(Symbol{u}))
            if (alive[v.id]) edges.emplace_back(Symbol{remap[u]}, Symbol{remap[v.id]});
    }
    return Sft(Alphabet(std::move(labels)), std::move(edges), x.name());
}

bool member(const Sft& x, const EpBiSeq& p) {
    if (p.alphabet_size() != x.size())
        throw AlphabetMismatchError("member: point over a different alphabet");
    const auto pl = static_cast<std::int64_t>(p.left_period().size());
    const auto pr = static_cast<std::int64_t>(p.right_period().size());
    // one full period inside each tail covers all cyclic pairs; the rest of
    // the window covers the seams and the center
    const std::int64_t lo = p.anchor() - pl - 1;
    const std::int64_t hi = p.center_end() + pr;
    for (std::int64_t i = lo; i <= hi; ++i)
        if (!x.allowed(p.at(i), p.at(i + 1))) return false;
    return true;
}

} // namespace sft
