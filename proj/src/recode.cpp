#include "sft/recode.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>

#include "sft/errors.hpp"

namespace sft {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

std::string block_label(const Alphabet& base, const std::vector<Symbol>& word) {
    bool plain = true;
    for (Symbol s : word)
        if (base.label(s).size() != 1) plain = false;
    std::string out;
    if (plain) {
        for (Symbol s : word) out += base.label(s);
        return out;
    }
    out = "(";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ".";
        out += base.label(word[i]);
    }
    out += ")";
    return out;
}

bool contains_factor(const std::vector<Symbol>& word, const std::vector<Symbol>& factor) {
    if (factor.empty() || factor.size() > word.size()) return false;
    for (std::size_t i = 0; i + factor.size() <= word.size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < factor.size() && hit; ++j)
            if (word[i + j] != factor[j]) hit = false;
        if (hit) return true;
    }
    return false;
}

// All length-k words over the alphabet avoiding every forbidden factor.
std::vector<std::vector<Symbol>> allowed_words(std::uint32_t alphabet_size, std::size_t k,
                                               const std::vector<std::vector<Symbol>>& forbidden) {
    std::vector<std::vector<Symbol>> out;
    std::vector<Symbol> cur;
    auto bad = [&](const std::vector<Symbol>& w) {
        for (const auto& f : forbidden)
            if (contains_factor(w, f)) return true;
        return false;
    };
    std::function<void()> rec = [&]() {
        if (bad(cur)) return;
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t s = 0; s < alphabet_size; ++s) {
            cur.push_back(Symbol{s});
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

} // namespace

CodedSft higher_block_recode(const Alphabet& alphabet,
                             const std::vector<std::vector<Symbol>>& forbidden) {
    std::size_t w = 2;
    for (const auto& f : forbidden) {
        if (f.empty()) throw PreconditionError("forbidden words must be nonempty");
        for (Symbol s : f)
            if (s.id >= alphabet.size()) throw PreconditionError("forbidden word symbol beyond alphabet");
        w = std::max(w, f.size());
    }
    const std::size_t block_len = w - 1;

    auto blocks = allowed_words(alphabet.size(), block_len, forbidden);
    if (blocks.empty()) throw EmptyShiftError("higher_block_recode: no allowed block");
    std::vector<std::string> labels;
    labels.reserve(blocks.size());
    for (const auto& b : blocks) labels.push_back(block_label(alphabet, b));

    std::vector<std::pair<Symbol, Symbol>> edges;
    for (std::uint32_t i = 0; i < blocks.size(); ++i) {
        for (std::uint32_t j = 0; j < blocks.size(); ++j) {
            bool overlap = true;
            for (std::size_t t = 0; t + 1 < block_len && overlap; ++t)
                if (blocks[i][t + 1] != blocks[j][t]) overlap = false;
            if (!overlap) continue;
            std::vector<Symbol> glued = blocks[i];
            glued.push_back(blocks[j].back());
            bool ok = true;
            for (const auto& f : forbidden)
                if (contains_factor(glued, f)) { ok = false; break; }
            if (ok) edges.emplace_back(Symbol{i}, Symbol{j});
        }
    }
    Sft coded = essentialize(Sft(Alphabet(std::move(labels)), std::move(edges), "recoded"));

    // block word -> symbol of the essential coded alphabet
    auto index = std::make_shared<std::map<std::vector<Symbol>, Symbol>>();
    auto words = std::make_shared<std::vector<std::vector<Symbol>>>();
    words->resize(coded.size());
    for (std::uint32_t i = 0; i < blocks.size(); ++i) {
        auto sym = coded.alphabet().find(block_label(alphabet, blocks[i]));
        if (sym) {
            index->emplace(blocks[i], *sym);
            (*words)[sym->id] = blocks[i];
        }
    }

    const std::uint32_t base_size = alphabet.size();
    const std::uint32_t coded_size = coded.size();

    auto encode = [index, block_len, coded_size](const EpBiSeq& x) {
        auto sample = [&index, &x, block_len](std::int64_t i) {
            std::vector<Symbol> word;
            word.reserve(block_len);
            for (std::size_t t = 0; t < block_len; ++t) word.push_back(x.at(i + static_cast<std::int64_t>(t)));
            auto it = index->find(word);
            if (it == index->end())
                throw PreconditionError("encode: point contains a disallowed block");
            return it->second;
        };
        const auto pl = static_cast<std::int64_t>(x.left_period().size());
        const auto pr = static_cast<std::int64_t>(x.right_period().size());
        return EpBiSeq::from_samples(coded_size, sample,
                                     x.anchor() - static_cast<std::int64_t>(block_len) - pl,
                                     static_cast<std::uint32_t>(pl),
                                     x.center_end() + pr,
                                     static_cast<std::uint32_t>(pr));
    };
    auto decode = [words, base_size](const EpBiSeq& y) {
        auto sample = [&words, &y](std::int64_t i) { return (*words)[y.at(i).id].front(); };
        const auto pl = static_cast<std::int64_t>(y.left_period().size());
        const auto pr = static_cast<std::int64_t>(y.right_period().size());
        return EpBiSeq::from_samples(base_size, sample, y.anchor() - pl,
                                     static_cast<std::uint32_t>(pl), y.center_end() + pr,
                                     static_cast<std::uint32_t>(pr));
    };
    return CodedSft{std::move(coded), std::move(encode), std::move(decode)};
}

ProductSft product(const Sft& x1, const Sft& x2) {
    if (!x1.is_essential() || !x2.is_essential())
        throw PreconditionError("product: factors must be essential");
    const std::uint32_t n1 = x1.size(), n2 = x2.size();
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n1) * n2);
    for (std::uint32_t a = 0; a < n1; ++a)
        for (std::uint32_t b = 0; b < n2; ++b)
            labels.push_back("(" + x1.alphabet().label(Symbol{a}) + "." +
                             x2.alphabet().label(Symbol{b}) + ")");
    std::vector<std::pair<Symbol, Symbol>> edges;
    for (std::uint32_t a = 0; a < n1; ++a)
        for (Symbol c : x1.successors(Symbol{a}))
            for (std::uint32_t b = 0; b < n2; ++b)
                for (Symbol d : x2.successors(Symbol{b}))
                    edges.emplace_back(Symbol{a * n2 + b}, Symbol{c.id * n2 + d.id});
    Sft prod(Alphabet(std::move(labels)), std::move(edges),
             x1.name() + "x" + x2.name());

    const std::uint32_t prod_size = prod.size();
    auto join = [n2, prod_size](const EpBiSeq& p1, const EpBiSeq& p2) {
        auto sample = [&p1, &p2, n2](std::int64_t i) {
            return Symbol{p1.at(i).id * n2 + p2.at(i).id};
        };
        const auto pl = lcm64(static_cast<std::int64_t>(p1.left_period().size()),
                              static_cast<std::int64_t>(p2.left_period().size()));
        const auto pr = lcm64(static_cast<std::int64_t>(p1.right_period().size()),
                              static_cast<std::int64_t>(p2.right_period().size()));
        return EpBiSeq::from_samples(prod_size, sample, std::min(p1.anchor(), p2.anchor()),
                                     static_cast<std::uint32_t>(pl),
                                     std::max(p1.center_end(), p2.center_end()),
                                     static_cast<std::uint32_t>(pr));
    };
    auto split = [n1, n2](const EpBiSeq& p) {
        const auto pl = static_cast<std::uint32_t>(p.left_period().size());
        const auto pr = static_cast<std::uint32_t>(p.right_period().size());
        auto sample1 = [&p, n2](std::int64_t i) { return Symbol{p.at(i).id / n2}; };
        auto sample2 = [&p, n2](std::int64_t i) { return Symbol{p.at(i).id % n2}; };
        EpBiSeq c1 = EpBiSeq::from_samples(n1, sample1, p.anchor(), pl, p.center_end(), pr);
        EpBiSeq c2 = EpBiSeq::from_samples(n2, sample2, p.anchor(), pl, p.center_end(), pr);
        return std::make_pair(std::move(c1), std::move(c2));
    };
    return ProductSft{std::move(prod), std::move(join), std::move(split)};
}

CodedSft power_shift(const Sft& x, std::uint32_t n) {
    if (n == 0) throw PreconditionError("power_shift: n must be >= 1");
    if (!x.is_essential()) throw PreconditionError("power_shift: SFT must be essential");

    // allowed n-blocks = walks of n symbols
    std::vector<std::vector<Symbol>> blocks;
    std::vector<Symbol> cur;
    std::function<void()> rec = [&]() {
        if (cur.size() == n) {
            blocks.push_back(cur);
            return;
        }
        if (cur.empty()) {
            for (std::uint32_t s = 0; s < x.size(); ++s) {
                cur.push_back(Symbol{s});
                rec();
                cur.pop_back();
            }
        } else {
            for (Symbol s : x.successors(cur.back())) {
                cur.push_back(s);
                rec();
                cur.pop_back();
            }
        }
    };
    rec();

    std::vector<std::string> labels;
    labels.reserve(blocks.size());
    for (const auto& b : blocks) labels.push_back(block_label(x.alphabet(), b));
    std::vector<std::pair<Symbol, Symbol>> edges;
    for (std::uint32_t i = 0; i < blocks.size(); ++i)
        for (std::uint32_t j = 0; j < blocks.size(); ++j)
            if (x.allowed(blocks[i].back(), blocks[j].front())) edges.emplace_back(Symbol{i}, Symbol{j});
    Sft power(Alphabet(std::move(labels)), std::move(edges),
              x.name() + "^" + std::to_string(n));

    auto words = std::make_shared<std::vector<std::vector<Symbol>>>(blocks);
    auto index = std::make_shared<std::map<std::vector<Symbol>, Symbol>>();
    for (std::uint32_t i = 0; i < words->size(); ++i) index->emplace((*words)[i], Symbol{i});

    const std::uint32_t base_size = x.size();
    const std::uint32_t power_size = power.size();
    const auto nn = static_cast<std::int64_t>(n);

    auto encode = [index, nn, power_size](const EpBiSeq& p) {
        auto sample = [&index, &p, nn](std::int64_t i) {
            std::vector<Symbol> word;
            word.reserve(static_cast<std::size_t>(nn));
            for (std::int64_t t = 0; t < nn; ++t) word.push_back(p.at(i * nn + t));
            auto it = index->find(word);
            if (it == index->end())
                throw PreconditionError("encode: point contains a disallowed block");
            return it->second;
        };
        const auto pl = static_cast<std::int64_t>(p.left_period().size());
        const auto pr = static_cast<std::int64_t>(p.right_period().size());
        const std::int64_t left_end = floor_div(p.anchor(), nn) - lcm64(pl, nn) / nn - 1;
        const std::int64_t right_begin = floor_div(p.center_end(), nn) + lcm64(pr, nn) / nn + 2;
        return EpBiSeq::from_samples(power_size, sample, left_end,
                                     static_cast<std::uint32_t>(lcm64(pl, nn) / nn), right_begin,
                                     static_cast<std::uint32_t>(lcm64(pr, nn) / nn));
    };
    auto decode = [words, nn, base_size](const EpBiSeq& y) {
        auto sample = [&words, &y, nn](std::int64_t j) {
            std::int64_t i = floor_div(j, nn);
            return (*words)[y.at(i).id][static_cast<std::size_t>(j - i * nn)];
        };
        const auto pl = static_cast<std::int64_t>(y.left_period().size());
        const auto pr = static_cast<std::int64_t>(y.right_period().size());
        return EpBiSeq::from_samples(base_size, sample, y.anchor() * nn,
                                     static_cast<std::uint32_t>(pl * nn), y.center_end() * nn,
                                     static_cast<std::uint32_t>(pr * nn));
    };
    return CodedSft{std::move(power), std::move(encode), std::move(decode)};
}

} // namespace sft
