#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sft {

/// Index into an alphabet. Symbols of different alphabets must not be mixed;
/// holders of symbols (points, SFTs) carry the alphabet size and check it.
struct Symbol {
    std::uint32_t id = 0;

    friend auto operator<=>(Symbol, Symbol) = default;
};

/// A finite ordered alphabet with display labels.
///
/// Labels are nonempty and must not contain the point-grammar delimiters
/// '|', '@', ',' or whitespace, so that every point has an unambiguous
/// textual form.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> labels);

    /// Alphabet {"0","1",...,"r-1"}.
    static Alphabet indexed(std::uint32_t r);

    std::uint32_t size() const { return static_cast<std::uint32_t>(labels_.size()); }
    const std::string& label(Symbol s) const { return labels_.at(s.id); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<Symbol> find(std::string_view label) const;

    /// True when some label has more than one character; the point grammar
    /// then separates symbols with commas.
    bool needs_separator() const { return needs_separator_; }

    bool operator==(const Alphabet& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::uint32_t> index_;
    bool needs_separator_ = false;
};

} // namespace sft
