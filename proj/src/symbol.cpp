#include "sft/symbol.hpp"

#include <cctype>

#include "sft/errors.hpp"

namespace sft {

namespace {

bool label_ok(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c == '|' || c == '@' || c == ',' || std::isspace(static_cast<unsigned char>(c)))
            return false;
    }
    return true;
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw ParseError("alphabet must be nonempty");
    for (std::uint32_t i = 0; i < labels_.size(); ++i) {
        const auto& l = labels_[i];
        if (!label_ok(l))
            throw ParseError("bad alphabet label '" + l + "': labels are nonempty and free of '|', '@', ',' and whitespace");
        if (!index_.emplace(l, i).second)
            throw ParseError("duplicate alphabet label '" + l + "'");
        if (l.size() > 1) needs_separator_ = true;
    }
}

Alphabet Alphabet::indexed(std::uint32_t r) {
    std::vector<std::string> labels;
    labels.reserve(r);
    for (std::uint32_t i = 0; i < r; ++i) labels.push_back(std::to_string(i));
    return Alphabet(std::move(labels));
}

std::optional<Symbol> Alphabet::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return Symbol{it->second};
}

} // namespace sft
