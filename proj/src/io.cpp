#include "sft/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sft/errors.hpp"
#include "sft/recode.hpp"

namespace sft::io {

using nlohmann::json;

namespace {

std::string join_symbols(const Alphabet& alphabet, const std::vector<Symbol>& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i && alphabet.needs_separator()) out += ",";
        out += alphabet.label(word[i]);
    }
    return out;
}

std::vector<Symbol> split_symbols(const Alphabet& alphabet, const std::string& text) {
    std::vector<Symbol> out;
    if (text.empty()) return out;
    if (alphabet.needs_separator()) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
            auto s = alphabet.find(tok);
            if (!s) throw ParseError("unknown symbol label '" + tok + "'");
            out.push_back(*s);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        for (char c : text) {
            auto s = alphabet.find(std::string(1, c));
            if (!s) throw ParseError(std::string("unknown symbol label '") + c + "'");
            out.push_back(*s);
        }
    }
    return out;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

} // namespace

std::string format_point(const Alphabet& alphabet, const EpBiSeq& p) {
    return join_symbols(alphabet, p.left_period()) + "|" + join_symbols(alphabet, p.center()) +
           "|" + join_symbols(alphabet, p.right_period()) + "@" + std::to_string(p.anchor());
}

EpBiSeq parse_point(const Alphabet& alphabet, const std::string& text) {
    std::size_t bar1 = text.find('|');
    std::size_t bar2 = bar1 == std::string::npos ? std::string::npos : text.find('|', bar1 + 1);
    std::size_t at = bar2 == std::string::npos ? std::string::npos : text.find('@', bar2 + 1);
    if (bar1 == std::string::npos || bar2 == std::string::npos || at == std::string::npos)
        throw ParseError("point must look like left|center|right@anchor: '" + text + "'");
    std::string left = text.substr(0, bar1);
    std::string center = text.substr(bar1 + 1, bar2 - bar1 - 1);
    std::string right = text.substr(bar2 + 1, at - bar2 - 1);
    std::string anchor_text = text.substr(at + 1);
    std::int64_t anchor = 0;
    try {
        std::size_t used = 0;
        anchor = std::stoll(anchor_text, &used);
        if (used != anchor_text.size()) throw ParseError("");
    } catch (...) {
        throw ParseError("bad anchor '" + anchor_text + "'");
    }
    auto l = split_symbols(alphabet, left);
    auto c = split_symbols(alphabet, center);
    auto r = split_symbols(alphabet, right);
    if (l.empty() || r.empty()) throw ParseError("period words must be nonempty: '" + text + "'");
    return EpBiSeq::make(alphabet.size(), std::move(l), std::move(c), std::move(r), anchor);
}

DyadicDist parse_dyadic(const std::string& text) {
    if (text == "1") return DyadicDist::pow2(0);
    if (text.rfind("2^-", 0) == 0) {
        const std::string k = text.substr(3);
        if (!k.empty() && k.find_first_not_of("0123456789") == std::string::npos)
            return DyadicDist::pow2(std::stoll(k));
    }
    throw ParseError("tolerances are dyadic literals 2^-k, got '" + text + "'");
}

LoadedSft parse_sft(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("alphabet") || !j["alphabet"].is_array())
        throw ParseError("SFT file needs an object with an 'alphabet' list");
    std::vector<std::string> labels;
    for (const auto& l : j["alphabet"]) {
        if (!l.is_string()) throw ParseError("alphabet labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    Alphabet alphabet(labels);
    std::string name = j.value("name", std::string{});

    const bool has_transitions = j.contains("transitions");
    const bool has_forbidden = j.contains("forbidden");
    if (has_transitions == has_forbidden)
        throw ParseError("SFT file needs exactly one of 'transitions' or 'forbidden'");

    if (has_transitions) {
        if (!j["transitions"].is_array()) throw ParseError("'transitions' must be a list");
        std::vector<std::pair<Symbol, Symbol>> edges;
        for (const auto& e : j["transitions"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError("each transition is a pair of labels");
            auto u = alphabet.find(e[0].get<std::string>());
            auto v = alphabet.find(e[1].get<std::string>());
            if (!u || !v) throw ParseError("transition over unknown label");
            edges.emplace_back(*u, *v);
        }
        return LoadedSft{Sft(std::move(alphabet), std::move(edges), std::move(name)), false};
    }

    if (!j["forbidden"].is_array()) throw ParseError("'forbidden' must be a list of words");
    std::vector<std::vector<Symbol>> forbidden;
    for (const auto& w : j["forbidden"]) {
        if (!w.is_string()) throw ParseError("forbidden words must be strings");
        forbidden.push_back(split_symbols(alphabet, w.get<std::string>()));
    }
    CodedSft coded = higher_block_recode(alphabet, forbidden);
    Sft named(coded.sft.alphabet(), coded.sft.transitions(),
              name.empty() ? coded.sft.name() : name);
    return LoadedSft{std::move(named), true};
}

LoadedSft load_sft(const std::string& path) { return parse_sft(read_file(path)); }

std::string format_sft(const Sft& x) {
    json j;
    if (!x.name().empty()) j["name"] = x.name();
    j["alphabet"] = json::array();
    for (std::uint32_t s = 0; s < x.size(); ++s) j["alphabet"].push_back(x.alphabet().label(Symbol{s}));
    j["transitions"] = json::array();
    for (auto [u, v] : x.transitions())
        j["transitions"].push_back({x.alphabet().label(u), x.alphabet().label(v)});
    return j.dump(2) + "\n";
}

AnyPseudoOrbit parse_pseudo_orbit(const Alphabet& alphabet, const std::string& text) {
    json j = parse_json(text);
    if (j.is_object() && j.contains("finite")) {
        if (!j["finite"].is_array() || j["finite"].size() < 2)
            throw ParseError("'finite' must list at least two points");
        FinitePseudoOrbit po;
        for (const auto& p : j["finite"]) po.points.push_back(parse_point(alphabet, p.get<std::string>()));
        return po;
    }
    if (j.is_object() && j.contains("tslimit")) {
        const auto& o = j["tslimit"];
        if (!o.is_object() || !o.contains("left") || !o.contains("right") || !o.contains("middle"))
            throw ParseError("'tslimit' needs left, right, middle");
        EpBiSeq a = parse_point(alphabet, o["left"].get<std::string>());
        EpBiSeq b = parse_point(alphabet, o["right"].get<std::string>());
        std::vector<EpBiSeq> middle;
        for (const auto& p : o["middle"]) middle.push_back(parse_point(alphabet, p.get<std::string>()));
        if (o.contains("m")) {
            std::int64_t m = o["m"].get<std::int64_t>();
            if (static_cast<std::int64_t>(middle.size()) != 2 * m - 1)
                throw ParseError("tslimit: middle must hold exactly 2m-1 points");
        }
        return TsLimitPseudoOrbit::make(std::move(a), std::move(b), std::move(middle));
    }
    throw ParseError("pseudo-orbit file needs 'finite' or 'tslimit'");
}

AnyPseudoOrbit load_pseudo_orbit(const Alphabet& alphabet, const std::string& path) {
    return parse_pseudo_orbit(alphabet, read_file(path));
}

std::string format_pseudo_orbit(const Alphabet& alphabet, const FinitePseudoOrbit& po) {
    json j;
    j["finite"] = json::array();
    for (const auto& p : po.points) j["finite"].push_back(format_point(alphabet, p));
    return j.dump(2) + "\n";
}

std::string format_pseudo_orbit(const Alphabet& alphabet, const TsLimitPseudoOrbit& t) {
    json j;
    j["tslimit"]["left"] = format_point(alphabet, t.left());
    j["tslimit"]["right"] = format_point(alphabet, t.right());
    j["tslimit"]["m"] = t.cut();
    j["tslimit"]["middle"] = json::array();
    for (const auto& p : t.middle()) j["tslimit"]["middle"].push_back(format_point(alphabet, p));
    return j.dump(2) + "\n";
}

Specification parse_specification(const Alphabet& alphabet, const std::string& text) {
    json j = parse_json(text);
    if (!j.is_array()) throw ParseError("specification file is a list of {a, b, point} records");
    Specification s;
    for (const auto& seg : j) {
        if (!seg.is_object() || !seg.contains("a") || !seg.contains("b") || !seg.contains("point"))
            throw ParseError("each specification record needs a, b, point");
        s.segments.push_back(SpecSegment{seg["a"].get<std::int64_t>(), seg["b"].get<std::int64_t>(),
                                         parse_point(alphabet, seg["point"].get<std::string>())});
    }
    try {
        s.validate();
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
    return s;
}

Specification load_specification(const Alphabet& alphabet, const std::string& path) {
    return parse_specification(alphabet, read_file(path));
}

BigRat parse_rational(const std::string& text) {
    auto parse_u64 = [](const std::string& s) -> std::uint64_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad rational component '" + s + "'");
        return std::stoull(s);
    };
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) return BigRat(parse_u64(text), 1);
    std::uint64_t num = parse_u64(text.substr(0, slash));
    std::uint64_t den = parse_u64(text.substr(slash + 1));
    if (den == 0) throw ParseError("rational with zero denominator");
    return BigRat(num, den);
}

FiniteMetricSpace parse_metric_space(const std::string& text) {
    std::istringstream in(text);
    std::size_t n = 0;
    if (!(in >> n) || n == 0) throw ParseError("metric file starts with the point count");
    std::vector<std::vector<BigRat>> table(n, std::vector<BigRat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw ParseError("metric table is incomplete");
            table[i][j] = parse_rational(tok);
        }
    return FiniteMetricSpace::make(std::move(table));
}

FiniteMetricSpace load_metric_space(const std::string& path) {
    return parse_metric_space(read_file(path));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << content;
}

} // namespace sft::io
