#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sft/bigrat.hpp"
#include "sft/dyadic.hpp"
#include "sft/metric_space.hpp"
#include "sft/point.hpp"
#include "sft/pseudo_orbit.hpp"
#include "sft/sft.hpp"
#include "sft/specification.hpp"

namespace sft::io {

/// Point grammar: `left_period "|" center "|" right_period "@" anchor`.
/// Symbols are written as labels, concatenated when every label is one
/// character and comma-separated otherwise; the center may be empty.
/// Examples: `0|1|0@0` is ...000 1 000..., `01||01@0` is the 2-periodic
/// point with 0 at index 0.
std::string format_point(const Alphabet& alphabet, const EpBiSeq& p);
EpBiSeq parse_point(const Alphabet& alphabet, const std::string& text);

/// Dyadic literals `2^-k` (and `1` for 2^0); the pipeline is exact, so
/// tolerances are never read as decimals.
DyadicDist parse_dyadic(const std::string& text);

/// SFT files are JSON objects with `alphabet` (list of labels), exactly one
/// of `transitions` (list of label pairs) or `forbidden` (list of words,
/// triggering higher-block recoding), and an optional `name`.
struct LoadedSft {
    Sft sft;
    bool recoded = false;
};
LoadedSft parse_sft(const std::string& text);
LoadedSft load_sft(const std::string& path);
std::string format_sft(const Sft& x);

/// Pseudo-orbit files: {"finite": [point, ...]} or
/// {"tslimit": {"left": point, "right": point, "middle": [point, ...], "m": int}}.
using AnyPseudoOrbit = std::variant<FinitePseudoOrbit, TsLimitPseudoOrbit>;
AnyPseudoOrbit parse_pseudo_orbit(const Alphabet& alphabet, const std::string& text);
AnyPseudoOrbit load_pseudo_orbit(const Alphabet& alphabet, const std::string& path);
std::string format_pseudo_orbit(const Alphabet& alphabet, const FinitePseudoOrbit& po);
std::string format_pseudo_orbit(const Alphabet& alphabet, const TsLimitPseudoOrbit& t);

/// Specification files: JSON list of {"a": int, "b": int, "point": point}.
Specification parse_specification(const Alphabet& alphabet, const std::string& text);
Specification load_specification(const Alphabet& alphabet, const std::string& path);

/// Metric-space files: first line n, then n rows of n rational entries
/// (`p/q` or plain integers) separated by whitespace.
FiniteMetricSpace parse_metric_space(const std::string& text);
FiniteMetricSpace load_metric_space(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

BigRat parse_rational(const std::string& text);

} // namespace sft::io
