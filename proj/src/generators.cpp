#include "sft/generators.hpp"

#include <numeric>

#include "sft/errors.hpp"

namespace sft {

Sft make_pq_shift(std::uint32_t p, std::uint32_t q) {
    if (p < 2 || q < 2) throw PreconditionError("pq shift needs p, q >= 2");
    if (std::gcd(p, q) != 1) throw PQNotCoprimeError("pq shift needs gcd(p, q) = 1");
    const std::uint32_t r = p + q - 1;
    std::vector<std::pair<Symbol, Symbol>> edges;
    for (std::uint32_t i = 0; i + 1 < p; ++i) edges.emplace_back(Symbol{i}, Symbol{i + 1});
    edges.emplace_back(Symbol{p - 1}, Symbol{0});
    edges.emplace_back(Symbol{0}, Symbol{p});
    for (std::uint32_t i = p; i + 1 < r; ++i) edges.emplace_back(Symbol{i}, Symbol{i + 1});
    edges.emplace_back(Symbol{r - 1}, Symbol{0});
    return Sft(Alphabet::indexed(r), std::move(edges),
               "X(" + std::to_string(p) + "," + std::to_string(q) + ")");
}

Sft make_cycle(std::uint32_t n) {
    if (n == 0) throw PreconditionError("cycle needs n >= 1");
    std::vector<std::pair<Symbol, Symbol>> edges;
    for (std::uint32_t i = 0; i < n; ++i) edges.emplace_back(Symbol{i}, Symbol{(i + 1) % n});
    return Sft(Alphabet::indexed(n), std::move(edges), "cycle" + std::to_string(n));
}

Sft make_full_shift(std::uint32_t r) {
    if (r == 0) throw PreconditionError("full shift needs r >= 1");
    std::vector<std::pair<Symbol, Symbol>> edges;
    for (std::uint32_t u = 0; u < r; ++u)
        for (std::uint32_t v = 0; v < r; ++v) edges.emplace_back(Symbol{u}, Symbol{v});
    return Sft(Alphabet::indexed(r), std::move(edges), "full" + std::to_string(r));
}

Sft make_golden_mean() {
    std::vector<std::pair<Symbol, Symbol>> edges{
        {Symbol{0}, Symbol{0}}, {Symbol{0}, Symbol{1}}, {Symbol{1}, Symbol{0}}};
    return Sft(Alphabet::indexed(2), std::move(edges), "golden-mean");
}

} // namespace sft
