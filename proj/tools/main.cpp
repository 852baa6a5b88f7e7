#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sft/analysis.hpp"
#include "sft/average.hpp"
#include "sft/errors.hpp"
#include "sft/generators.hpp"
#include "sft/io.hpp"
#include "sft/metric_space.hpp"
#include "sft/oracle.hpp"
#include "sft/sampling.hpp"
#include "sft/shadowing.hpp"
#include "sft/specification.hpp"

using nlohmann::json;
using namespace sft;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadInput = 2;

void render_plain(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            render_plain(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) render_plain(v, prefix + "[" + std::to_string(i++) + "]", out);
        if (j.empty()) out << prefix << " = []\n";
    } else {
        out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

/// Identical data behind both renderings; `structured` dumps the JSON itself.
void emit_report(const json& report, const std::string& format) {
    if (format == "structured")
        std::cout << report.dump(2) << "\n";
    else
        render_plain(report, "", std::cout);
}

json analyze_json(const Sft& x) {
    json a;
    a["name"] = x.name();
    a["symbols"] = x.size();
    a["transitions"] = x.transition_count();
    CyclicDecomposition d = period_and_classes(x);
    a["transitive"] = d.transitive;
    a["mixing"] = d.mixing;
    a["period"] = d.period;
    a["entropy"] = entropy(x);
    if (d.mixing) a["transition_length"] = transition_length(x);
    if (d.transitive) {
        a["minimal_gap"] = minimal_gap(x);
        json classes = json::array();
        for (std::uint32_t s = 0; s < x.size(); ++s)
            classes.push_back(*d.class_of[s]);
        a["class_of"] = classes;
    } else {
        json table = json::array();
        for (const auto& comp : d.table) {
            json row;
            row["period"] = comp.period;
            row["essential"] = comp.essential;
            json members = json::array();
            for (Symbol s : comp.members) members.push_back(x.alphabet().label(s));
            row["members"] = members;
            table.push_back(row);
        }
        a["component_table"] = table;
    }
    return a;
}

int cmd_analyze(const std::string& file, const std::string& format) {
    io::LoadedSft loaded = io::load_sft(file);
    Sft x = essentialize(loaded.sft);
    json report;
    report["command"] = "analyze " + file;
    report["analysis"] = analyze_json(x);
    if (loaded.recoded) report["analysis"]["recoded"] = true;
    emit_report(report, format);
    return kExitOk;
}

int cmd_generate(const std::string& kind, std::vector<std::int64_t> params, const std::string& out,
                 const std::string& format) {
    for (std::int64_t p : params)
        if (p < 1 || p > 1000000) throw ParseError("generator parameters must be in 1..10^6");
    Sft x = [&]() {
        if (kind == "pq") {
            if (params.size() != 2) throw ParseError("generate pq needs p and q");
            return make_pq_shift(static_cast<std::uint32_t>(params[0]),
                                 static_cast<std::uint32_t>(params[1]));
        }
        if (kind == "cycle") {
            if (params.size() != 1) throw ParseError("generate cycle needs n");
            return make_cycle(static_cast<std::uint32_t>(params[0]));
        }
        if (kind == "full") {
            if (params.size() != 1) throw ParseError("generate full needs r");
            return make_full_shift(static_cast<std::uint32_t>(params[0]));
        }
        throw ParseError("unknown generator kind '" + kind + "' (pq, cycle, full)");
    }();
    const std::string text = io::format_sft(x);
    if (!out.empty()) io::write_file(out, text);
    json report;
    report["command"] = "generate " + kind;
    report["analysis"] = analyze_json(x);
    if (!out.empty()) report["written"] = out;
    emit_report(report, format);
    return kExitOk;
}

int cmd_shadow(const std::string& file, const std::string& po_path, std::int64_t max_gap,
               const std::string& out, const std::string& format) {
    io::LoadedSft loaded = io::load_sft(file);
    Sft x = essentialize(loaded.sft);
    auto any = io::load_pseudo_orbit(x.alphabet(), po_path);
    json report;
    report["command"] = "shadow " + file;
    bool verified = false;

    if (auto* t = std::get_if<TsLimitPseudoOrbit>(&any)) {
        GapShadow shadow = two_sided_limit_shadow(x, *t);
        verified = verify_two_sided(*t, shadow.point, shadow.gap) && member(x, shadow.point);
        if (max_gap >= 0 && std::llabs(shadow.gap) > max_gap) verified = false;
        report["witness"]["point"] = io::format_point(x.alphabet(), shadow.point);
        report["witness"]["gap"] = shadow.gap;
        report["verified"] = verified;
        if (!out.empty()) {
            json w;
            w["point"] = io::format_point(x.alphabet(), shadow.point);
            w["gap"] = shadow.gap;
            io::write_file(out, w.dump(2) + "\n");
            report["written"] = out;
        }
    } else {
        auto& po = std::get<FinitePseudoOrbit>(any);
        FiniteShadow shadow = shadow_finite(x, po);
        DyadicDist delta = validate_delta(po.points);
        verified = member(x, shadow.point) && shadow.eps <= delta;
        report["witness"]["point"] = io::format_point(x.alphabet(), shadow.point);
        report["witness"]["eps"] = shadow.eps.to_string();
        report["delta"] = delta.to_string();
        report["verified"] = verified;
        if (!out.empty()) {
            json w;
            w["point"] = io::format_point(x.alphabet(), shadow.point);
            w["eps"] = shadow.eps.to_string();
            io::write_file(out, w.dump(2) + "\n");
            report["written"] = out;
        }
    }
    emit_report(report, format);
    return verified ? kExitOk : kExitVerificationFailed;
}

int cmd_connect(const std::string& file, const std::string& from_text, const std::string& to_text,
                const std::string& delta_text, const std::string& out, const std::string& format) {
    io::LoadedSft loaded = io::load_sft(file);
    Sft x = essentialize(loaded.sft);
    EpBiSeq from = io::parse_point(x.alphabet(), from_text);
    EpBiSeq to = io::parse_point(x.alphabet(), to_text);
    DyadicDist delta = io::parse_dyadic(delta_text);
    FinitePseudoOrbit po = chain_connect(x, from, to, delta);
    DyadicDist achieved = validate_delta(po.points);
    const bool verified = achieved <= delta && po.points.front() == from && po.points.back() == to;

    json report;
    report["command"] = "connect " + file;
    report["points"] = po.points.size();
    report["delta"] = delta.to_string();
    report["achieved"] = achieved.to_string();
    report["verified"] = verified;
    if (!out.empty()) {
        io::write_file(out, io::format_pseudo_orbit(x.alphabet(), po));
        report["written"] = out;
    }
    emit_report(report, format);
    return verified ? kExitOk : kExitVerificationFailed;
}

int cmd_spec_shadow(const std::string& file, const std::string& spec_path,
                    const std::string& eps_text, bool periodic, const std::string& out,
                    const std::string& format) {
    io::LoadedSft loaded = io::load_sft(file);
    Sft x = essentialize(loaded.sft);
    Specification s = io::load_specification(x.alphabet(), spec_path);
    DyadicDist eps = io::parse_dyadic(eps_text);
    const std::int64_t k = eps.exponent();
    EpBiSeq y = shadow_specification(x, s, k, periodic);

    bool verified = member(x, y);
    DyadicDist worst = DyadicDist::zero();
    for (const auto& seg : s.segments) {
        for (std::int64_t n = seg.a; n <= seg.b; ++n) {
            DyadicDist d = dist(y.shifted(n), seg.point.shifted(n));
            if (d > worst) worst = d;
            if (!(d < eps)) verified = false;
        }
    }
    json report;
    report["command"] = "spec-shadow " + file;
    report["witness"]["point"] = io::format_point(x.alphabet(), y);
    report["eps"] = eps.to_string();
    report["worst_specified_distance"] = worst.to_string();
    if (periodic) {
        const std::int64_t length = s.last_end() - s.first_start() + spec_spacing(x, k);
        const bool exact = y.shifted(length) == y;
        report["period"] = length;
        report["period_exact"] = exact;
        verified = verified && exact;
    }
    report["verified"] = verified;
    if (!out.empty()) {
        json w;
        w["point"] = io::format_point(x.alphabet(), y);
        io::write_file(out, w.dump(2) + "\n");
        report["written"] = out;
    }
    emit_report(report, format);
    return verified ? kExitOk : kExitVerificationFailed;
}

int cmd_decay(const std::string& metric_path, const std::string& po_path, std::int64_t p,
              const std::string& format) {
    FiniteMetricSpace space = io::load_metric_space(metric_path);
    Alphabet alphabet = Alphabet::indexed(space.size());
    auto any = io::load_pseudo_orbit(alphabet, po_path);
    auto* t = std::get_if<TsLimitPseudoOrbit>(&any);
    if (!t) throw ParseError("decay needs a tslimit pseudo-orbit");
    EpBiSeq x = diagonal_shadow(*t);
    DecayCheck check = verify_decay(space, *t, x, p);

    json report;
    report["command"] = "decay " + metric_path;
    report["diagonal"] = io::format_point(alphabet, x);
    report["p"] = p;
    report["n_p"] = check.n_p;
    report["minimal_n_p"] = check.minimal_n_p;
    report["checked_up_to"] = check.checked_up_to;
    report["ok"] = check.ok;
    if (check.violating_m) report["violating_m"] = *check.violating_m;
    emit_report(report, format);
    return check.ok ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_witness(const std::string& file, const std::string& po_path,
                       const std::string& witness_path, const std::string& format) {
    io::LoadedSft loaded = io::load_sft(file);
    Sft x = essentialize(loaded.sft);
    auto any = io::load_pseudo_orbit(x.alphabet(), po_path);
    json w = json::parse(io::read_file(witness_path), nullptr, false);
    if (w.is_discarded() || !w.contains("point")) throw ParseError("witness file needs a 'point'");
    EpBiSeq y = io::parse_point(x.alphabet(), w["point"].get<std::string>());

    bool verified = member(x, y);
    json report;
    report["command"] = "verify --witness";
    if (auto* t = std::get_if<TsLimitPseudoOrbit>(&any)) {
        const std::int64_t gap = w.value("gap", std::int64_t{0});
        verified = verified && verify_two_sided(*t, y, gap);
        report["gap"] = gap;
    } else {
        auto& po = std::get<FinitePseudoOrbit>(any);
        DyadicDist delta = validate_delta(po.points);
        DyadicDist eps = DyadicDist::zero();
        for (std::size_t i = 0; i < po.points.size(); ++i) {
            DyadicDist d = dist(y.shifted(static_cast<std::int64_t>(i)), po.points[i]);
            if (d > eps) eps = d;
        }
        verified = verified && eps <= delta;
        report["eps"] = eps.to_string();
        report["delta"] = delta.to_string();
    }
    report["verified"] = verified;
    emit_report(report, format);
    return verified ? kExitOk : kExitVerificationFailed;
}

// ------------------------------------------------------------ verify suites

struct SuiteCase {
    std::string id;
    bool pass;
    std::string detail;
};

void suite_points(std::uint64_t, std::vector<SuiteCase>& cases) {
    // enumeration soundness and small-bounds completeness spot checks
    for (const Sft& x : {make_full_shift(2), make_golden_mean(), make_cycle(2)}) {
        EnumBounds b;
        b.max_period = 2;
        b.max_center = 2;
        b.max_anchor = 2;
        auto pts = enumerate_points(x, b);
        bool sound = true;
        for (const auto& p : pts) sound = sound && member(x, p);
        std::unordered_set<EpBiSeq, EpBiSeqHash> uniq(pts.begin(), pts.end());
        bool distinct = uniq.size() == pts.size();
        bool complete = true;
        for (const auto& w : cycle_words(x, 2)) {
            EpBiSeq q = EpBiSeq::periodic(x.size(), std::vector<Symbol>(w), 0);
            if (!uniq.count(q)) complete = false;
        }
        cases.push_back({"points/" + x.name(), sound && distinct && complete,
                         std::to_string(pts.size()) + " points"});
    }
}

void suite_agreement(std::uint64_t seed, std::vector<SuiteCase>& cases) {
    std::vector<Sft> family = enumerate_sfts(2);
    family.push_back(make_pq_shift(3, 4));
    std::size_t index = 0;
    for (const Sft& x : family) {
        ++index;
        CyclicDecomposition d = period_and_classes(x);
        if (!d.transitive) continue;
        sampling::Rng rng(seed ^ (x.size() * 1315423911ull) ^ x.transition_count());
        bool pass = true;
        std::string detail;
        for (int trial = 0; trial < 20 && pass; ++trial) {
            TsLimitPseudoOrbit t = sampling::random_ts_pseudo_orbit(x, rng);
            GapShadow synth = two_sided_limit_shadow(x, t);
            if (!verify_two_sided(t, synth.point, synth.gap)) {
                pass = false;
                detail = "synthesized shadow failed verification";
                break;
            }
            EnumBounds b = EnumBounds::covering(synth.point);
            auto found = brute_shadow_search(x, t, std::llabs(synth.gap), b);
            if (!found || std::llabs(found->gap) != std::llabs(synth.gap)) {
                pass = false;
                detail = "oracle disagreed on the minimal gap";
            }
        }
        const std::string id =
            x.name().empty() ? "graph" + std::to_string(index) : x.name();
        cases.push_back({"agreement/" + id, pass, detail.empty() ? "20 pseudo-orbits" : detail});
    }
}

void suite_sfts(std::uint64_t, std::vector<SuiteCase>& cases) {
    auto family1 = enumerate_sfts(1);
    cases.push_back({"sfts/k1", family1.size() == 1, std::to_string(family1.size()) + " graphs"});
    auto family2 = enumerate_sfts(2);
    bool has_full = false, has_gm = false, has_cycle = false;
    for (const Sft& x : family2) {
        if (x.size() != 2) continue;
        bool e00 = x.allowed(Symbol{0}, Symbol{0}), e01 = x.allowed(Symbol{0}, Symbol{1});
        bool e10 = x.allowed(Symbol{1}, Symbol{0}), e11 = x.allowed(Symbol{1}, Symbol{1});
        if (e00 && e01 && e10 && e11) has_full = true;
        if (e00 && e01 && e10 && !e11) has_gm = true;
        if (!e00 && e01 && e10 && !e11) has_cycle = true;
    }
    cases.push_back({"sfts/k2-members", has_full && has_gm && has_cycle,
                     std::to_string(family2.size()) + " graphs"});
}

int cmd_verify_suite(const std::string& suite, std::uint64_t seed, const std::string& format) {
    std::vector<SuiteCase> cases;
    if (suite == "points" || suite == "all") suite_points(seed, cases);
    if (suite == "agreement" || suite == "all") suite_agreement(seed, cases);
    if (suite == "sfts" || suite == "all") suite_sfts(seed, cases);
    if (cases.empty()) throw ParseError("unknown suite '" + suite + "' (points, agreement, sfts, all)");

    std::sort(cases.begin(), cases.end(),
              [](const SuiteCase& a, const SuiteCase& b) { return a.id < b.id; });
    bool all_pass = true;
    json report;
    report["command"] = "verify --suite " + suite;
    report["cases"] = json::array();
    for (const auto& c : cases) {
        all_pass = all_pass && c.pass;
        json jc;
        jc["id"] = c.id;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        report["cases"].push_back(jc);
    }
    report["verified"] = all_pass;
    emit_report(report, format);
    return all_pass ? kExitOk : kExitVerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shift-of-finite-type shadowing toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "plain";
    app.add_option("--format", format, "report rendering")->check(CLI::IsMember({"plain", "structured"}));

    std::string file, po_path, out, from_text, to_text, delta_text, eps_text, spec_path,
        witness_path, kind;
    std::vector<std::int64_t> gen_params;
    std::int64_t max_gap = -1, p_decay = 2;
    std::uint64_t seed = 1;
    bool periodic = false;
    std::string suite;

    auto* analyze = app.add_subcommand("analyze", "analysis table for an SFT file");
    analyze->add_option("file", file)->required();

    auto* generate = app.add_subcommand("generate", "write a named example SFT");
    generate->add_option("kind", kind, "pq | cycle | full")->required();
    generate->add_option("params", gen_params, "generator parameters")->expected(1, 2);
    generate->add_option("-o,--output", out, "output SFT file");

    auto* shadow = app.add_subcommand("shadow", "synthesize and verify a shadow");
    shadow->add_option("file", file)->required();
    shadow->add_option("--pseudo-orbit", po_path)->required();
    shadow->add_option("--max-gap", max_gap, "fail when |gap| exceeds this");
    shadow->add_option("-o,--output", out, "witness output file");

    auto* connect = app.add_subcommand("connect", "chain two points by a delta-pseudo-orbit");
    connect->add_option("file", file)->required();
    connect->add_option("--from", from_text)->required();
    connect->add_option("--to", to_text)->required();
    connect->add_option("--delta", delta_text, "dyadic literal 2^-k")->required();
    connect->add_option("-o,--output", out, "pseudo-orbit output file");

    auto* spec_shadow = app.add_subcommand("spec-shadow", "shadow a specification");
    spec_shadow->add_option("file", file)->required();
    spec_shadow->add_option("--spec", spec_path)->required();
    spec_shadow->add_option("--eps", eps_text, "dyadic literal 2^-k")->required();
    spec_shadow->add_flag("--periodic", periodic, "return a periodic shadow");
    spec_shadow->add_option("-o,--output", out, "witness output file");

    auto* decay = app.add_subcommand("decay", "diagonal shadow over a finite metric space");
    decay->add_option("metric", file)->required();
    decay->add_option("--pseudo-orbit", po_path)->required();
    decay->add_option("--p", p_decay, "decay exponent");

    auto* verify = app.add_subcommand("verify", "oracle cross-checks / witness re-verification");
    verify->add_option("file", file);
    verify->add_option("--pseudo-orbit", po_path);
    verify->add_option("--witness", witness_path);
    verify->add_option("--suite", suite, "points | agreement | sfts | all");
    verify->add_option("--seed", seed, "seed for randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(file, format);
        if (app.got_subcommand(generate)) return cmd_generate(kind, gen_params, out, format);
        if (app.got_subcommand(shadow)) return cmd_shadow(file, po_path, max_gap, out, format);
        if (app.got_subcommand(connect))
            return cmd_connect(file, from_text, to_text, delta_text, out, format);
        if (app.got_subcommand(spec_shadow))
            return cmd_spec_shadow(file, spec_path, eps_text, periodic, out, format);
        if (app.got_subcommand(decay)) return cmd_decay(file, po_path, p_decay, format);
        if (app.got_subcommand(verify)) {
            if (!witness_path.empty()) return cmd_verify_witness(file, po_path, witness_path, format);
            if (suite.empty()) suite = "all";
            return cmd_verify_suite(suite, seed, format);
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
