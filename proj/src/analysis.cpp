#include "sft/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sft/errors.hpp"

namespace sft {

namespace {

void require_essential(const Sft& x, const char* op) {
    if (!x.is_essential())
        throw PreconditionError(std::string(op) + ": SFT must be essential");
}

// Square boolean matrix with 64-bit packed rows.
class BitMatrix {
public:
    explicit BitMatrix(std::uint32_t n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {}

    static BitMatrix identity(std::uint32_t n) {
        BitMatrix m(n);
        for (std::uint32_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }

    static BitMatrix adjacency(const Sft& x) {
        BitMatrix m(x.size());
        for (std::uint32_t u = 0; u < x.size(); ++u)
            for (Symbol v : x.successors(Symbol{u})) m.set(u, v.id);
        return m;
    }

    void set(std::uint32_t i, std::uint32_t j) { bits_[std::size_t(i) * words_ + j / 64] |= std::uint64_t(1) << (j % 64); }
    bool get(std::uint32_t i, std::uint32_t j) const {
        return (bits_[std::size_t(i) * words_ + j / 64] >> (j % 64)) & 1;
    }

    BitMatrix times(const BitMatrix& o) const {
        BitMatrix r(n_);
        for (std::uint32_t i = 0; i < n_; ++i) {
            const std::uint64_t* row = &bits_[std::size_t(i) * words_];
            std::uint64_t* out = &r.bits_[std::size_t(i) * words_];
            for (std::uint32_t k = 0; k < n_; ++k) {
                if ((row[k / 64] >> (k % 64)) & 1) {
                    const std::uint64_t* ok = &o.bits_[std::size_t(k) * words_];
                    for (std::uint32_t w = 0; w < words_; ++w) out[w] |= ok[w];
                }
            }
        }
        return r;
    }

    bool all_true() const {
        for (std::uint32_t i = 0; i < n_; ++i)
            for (std::uint32_t j = 0; j < n_; ++j)
                if (!get(i, j)) return false;
        return true;
    }

private:
    std::uint32_t n_, words_;
    std::vector<std::uint64_t> bits_;
};

} // namespace

SccInfo strongly_connected_components(const Sft& x) {
    const std::uint32_t n = x.size();
    SccInfo info;
    info.component_of.assign(n, 0);
    // Tarjan, iterative
    std::vector<std::int32_t> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    std::int32_t counter = 0;

    struct Frame {
        std::uint32_t v;
        std::size_t next_succ;
    };
    std::vector<Frame> call;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& succ = x.successors(Symbol{f.v});
            if (f.next_succ < succ.size()) {
                std::uint32_t w = succ[f.next_succ++].id;
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    std::vector<Symbol> comp;
                    std::uint32_t w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        info.component_of[w] = static_cast<std::uint32_t>(info.components.size());
                        comp.push_back(Symbol{w});
                    } while (w != f.v);
                    std::sort(comp.begin(), comp.end());
                    info.components.push_back(std::move(comp));
                }
                std::uint32_t v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    return info;
}

namespace {

// Period of one strongly connected component: gcd of all cycle lengths,
// computed from BFS level differences across its internal edges.
std::uint32_t component_period(const Sft& x, const SccInfo& scc, std::uint32_t comp,
                               std::vector<std::int64_t>* levels_out) {
    const auto& members = scc.components[comp];
    std::vector<std::int64_t> level(x.size(), -1);
    std::uint32_t root = members.front().id;
    level[root] = 0;
    std::vector<std::uint32_t> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::uint32_t u = queue[qi];
        for (Symbol v : x.successors(Symbol{u})) {
            if (scc.component_of[v.id] != comp) continue;
            if (level[v.id] == -1) {
                level[v.id] = level[u] + 1;
                queue.push_back(v.id);
            }
        }
    }
    std::int64_t g = 0;
    bool has_edge = false;
    for (Symbol u : members) {
        for (Symbol v : x.successors(u)) {
            if (scc.component_of[v.id] != comp) continue;
            has_edge = true;
            g = std::gcd(g, std::llabs(level[u.id] + 1 - level[v.id]));
        }
    }
    if (levels_out) *levels_out = std::move(level);
    if (!has_edge) return 0;
    return static_cast<std::uint32_t>(g);
}

} // namespace

CyclicDecomposition period_and_classes(const Sft& x) {
    require_essential(x, "period_and_classes");
    SccInfo scc = strongly_connected_components(x);
    CyclicDecomposition d;
    d.class_of.assign(x.size(), std::nullopt);
    d.transitive = scc.components.size() == 1;

    for (std::uint32_t c = 0; c < scc.components.size(); ++c) {
        std::uint32_t p = component_period(x, scc, c, nullptr);
        d.table.push_back({scc.components[c], p, p > 0});
    }
    // designated component: most symbols among essential ones, lowest symbol
    // id breaking ties (an essential SFT always has one cycle somewhere)
    std::optional<std::uint32_t> best;
    for (std::uint32_t c = 0; c < d.table.size(); ++c) {
        if (!d.table[c].essential) continue;
        if (!best) {
            best = c;
            continue;
        }
        const auto& cur = d.table[c].members;
        const auto& bst = d.table[*best].members;
        if (cur.size() > bst.size() || (cur.size() == bst.size() && cur.front() < bst.front()))
            best = c;
    }
    if (!best) throw PreconditionError("period_and_classes: essential SFT without any cycle");
    d.designated_component = *best;
    d.period = d.table[*best].period;

    std::vector<std::int64_t> levels;
    component_period(x, scc, *best, &levels);
    for (Symbol u : d.table[*best].members) {
        std::int64_t r = levels[u.id] % d.period;
        d.class_of[u.id] = static_cast<std::uint32_t>(r < 0 ? r + d.period : r);
    }
    d.mixing = d.transitive && d.period == 1;
    return d;
}

std::uint32_t transition_length(const Sft& x) {
    require_essential(x, "transition_length");
    CyclicDecomposition d = period_and_classes(x);
    if (!d.mixing) throw NotMixingError("transition_length: SFT is not mixing");
    const std::uint32_t n = x.size();
    BitMatrix a = BitMatrix::adjacency(x);
    if (n == 1) return a.get(0, 0) ? 0 : 1; // single self-loop: empty path already connects
    BitMatrix power = a;
    const std::uint64_t cap = std::uint64_t(n - 1) * (n - 1) + 1;
    for (std::uint64_t t = 1; t <= cap; ++t) {
        if (power.all_true()) return static_cast<std::uint32_t>(t);
        power = power.times(a);
    }
    if (power.all_true()) return static_cast<std::uint32_t>(cap + 1);
    throw NotMixingError("transition_length: no positive power within the Wielandt bound");
}

namespace {

// Feasible path lengths u -> v for every t <= horizon, as reach[t] bitsets.
std::vector<std::vector<bool>> reach_table(const Sft& x, Symbol u, std::int64_t horizon) {
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(horizon) + 1,
                                         std::vector<bool>(x.size(), false));
    reach[0][u.id] = true;
    for (std::int64_t t = 1; t <= horizon; ++t) {
        for (std::uint32_t w = 0; w < x.size(); ++w) {
            if (!reach[t - 1][w]) continue;
            for (Symbol s : x.successors(Symbol{w})) reach[t][s.id] = true;
        }
    }
    return reach;
}

} // namespace

PathSpectrum path_spectrum(const Sft& x, Symbol u, Symbol v) {
    require_essential(x, "path_spectrum");
    PathSpectrum spec;
    spec.from = u;
    spec.to = v;

    SccInfo scc = strongly_connected_components(x);
    const std::uint32_t n = x.size();
    std::uint32_t period = 1;
    bool same_component = scc.component_of[u.id] == scc.component_of[v.id];
    if (same_component) {
        std::uint32_t p = component_period(x, scc, scc.component_of[u.id], nullptr);
        if (p > 0) period = p;
    }
    spec.period = period;

    const std::int64_t horizon =
        static_cast<std::int64_t>(period) * (std::int64_t(n - 1) * (n - 1) + 1) + 2 * period + n + 2;
    auto reach = reach_table(x, u, horizon);

    std::vector<std::int64_t> feasible;
    for (std::int64_t t = 0; t <= horizon; ++t)
        if (reach[t][v.id]) feasible.push_back(t);
    if (feasible.empty()) return spec; // unreachable within (safe) horizon
    spec.reachable = true;

    if (same_component) {
        std::uint32_t r = static_cast<std::uint32_t>(feasible.front() % period);
        spec.residue = r;
        // largest congruent infeasible length determines the threshold
        std::int64_t last_missing = -1;
        for (std::int64_t t = r; t <= horizon; t += period)
            if (!reach[t][v.id]) last_missing = t;
        std::int64_t threshold = last_missing + static_cast<std::int64_t>(period);
        if (last_missing == -1) threshold = feasible.front();
        spec.threshold = threshold;
        for (std::int64_t t : feasible)
            if (t < threshold) spec.lengths_below.push_back(t);
    } else {
        spec.lengths_below = std::move(feasible);
    }
    return spec;
}

std::variant<std::vector<Symbol>, PathSpectrum> connect_path(const Sft& x, Symbol u, Symbol v,
                                                             std::int64_t n) {
    require_essential(x, "connect_path");
    if (n < 0) throw PreconditionError("connect_path: length must be nonnegative");
    if (n > (std::int64_t(1) << 22))
        throw PreconditionError("connect_path: length too large to materialize");
    auto reach = reach_table(x, u, n);
    if (!reach[static_cast<std::size_t>(n)][v.id]) return path_spectrum(x, u, v);

    // walk back from v through the layered reach sets, preferring the lowest
    // symbol id for determinism
    std::vector<Symbol> word(static_cast<std::size_t>(n) + 1, Symbol{0});
    word[static_cast<std::size_t>(n)] = v;
    for (std::int64_t t = n; t-- > 0;) {
        Symbol next = word[static_cast<std::size_t>(t) + 1];
        bool found = false;
        for (std::uint32_t w = 0; w < x.size() && !found; ++w) {
            if (reach[static_cast<std::size_t>(t)][w] && x.allowed(Symbol{w}, next)) {
                word[static_cast<std::size_t>(t)] = Symbol{w};
                found = true;
            }
        }
        if (!found) throw std::logic_error("connect_path: broken layered reconstruction");
    }
    return word;
}

double entropy(const Sft& x) {
    require_essential(x, "entropy");
    SccInfo scc = strongly_connected_components(x);
    double best = 0.0; // cycle-free components contribute spectral radius 0
    for (std::uint32_t c = 0; c < scc.components.size(); ++c) {
        const auto& members = scc.components[c];
        std::uint32_t p = component_period(x, scc, c, nullptr);
        if (p == 0) continue;
        // power-iterate (A|_C)^p: block-diagonal over cyclic classes, each
        // block primitive with the same Perron value lambda^p
        const std::size_t m = members.size();
        std::vector<std::uint32_t> local(x.size(), 0);
        for (std::size_t i = 0; i < m; ++i) local[members[i].id] = static_cast<std::uint32_t>(i);
        std::vector<std::vector<std::uint32_t>> succ(m);
        for (std::size_t i = 0; i < m; ++i)
            for (Symbol v : x.successors(members[i]))
                if (scc.component_of[v.id] == c) succ[i].push_back(local[v.id]);

        std::vector<double> vec(m, 1.0), tmp(m, 0.0), next(m, 0.0);
        double rho = 1.0;
        const double tol = 1e-12;
        for (int iter = 0; iter < 100000; ++iter) {
            // apply A p times
            std::vector<double> cur = vec;
            for (std::uint32_t step = 0; step < p; ++step) {
                std::fill(tmp.begin(), tmp.end(), 0.0);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::uint32_t j : succ[i]) tmp[i] += cur[j];
                cur.swap(tmp);
            }
            next = cur;
            double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                double ratio = next[i] / vec[i];
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            }
            rho = 0.5 * (lo + hi);
            double norm = 0.0;
            for (double t : next) norm = std::max(norm, t);
            for (std::size_t i = 0; i < m; ++i) vec[i] = next[i] / norm;
            if (hi - lo <= tol * hi) break;
        }
        best = std::max(best, std::log(rho) / p);
    }
    return best;
}

} // namespace sft
