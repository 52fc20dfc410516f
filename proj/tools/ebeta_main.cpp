#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "ebeta/codings.hpp"
#include "ebeta/embedding.hpp"
#include "ebeta/report.hpp"
#include "ebeta/spectrum.hpp"
#include "ebeta/svg.hpp"
#include "ebeta/symbolic.hpp"
#include "ebeta/verify_suite.hpp"

namespace {

using namespace ebeta;
using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&now));
    return buf;
}

Beta parse_beta(const std::string& text) { return Beta::make(Rat::parse(text)); }

void emit(Report& report, bool timestamp) {
    if (timestamp) report.timestamp = iso_timestamp();
    std::cout << report.dump();
}

json bracket_json(const RootBracket& r) {
    return json{{"lo", r.lo.str()},
                {"hi", r.hi.str()},
                {"approx", enclosure_json(r.approx())}};
}

int cmd_dims(const std::string& beta_text, double tol, bool timestamp) {
    const Beta beta = parse_beta(beta_text);
    const Rat tol_rat = Rat::from_double(tol);
    const CubicPoly pa = char_poly(coding_transitions());
    const CubicPoly pb = char_poly(unique_coding_transitions());
    const RootBracket ra = spectral_radius(pa, tol_rat);
    const RootBracket rb = spectral_radius(pb, tol_rat);
    Report report;
    report.beta = beta.value().str();
    report.command = "dims";
    report.results["char_poly_full_shift"] = pa.str();
    report.results["char_poly_unique_shift"] = pb.str();
    report.results["radius_full_shift"] = bracket_json(ra);
    report.results["radius_unique_shift"] = bracket_json(rb);
    report.results["dimension_attractor"] = enclosure_json(hausdorff_dimension(ra, beta));
    report.results["dimension_unique_codings"] = enclosure_json(hausdorff_dimension(rb, beta));
    json covers = json::array();
    for (int n : {1, 2, 4, 8})
        covers.push_back(json{{"n", n}, {"bound", enclosure_json(measure_upper_bound(beta, n))}});
    report.results["measure_upper_bounds"] = covers;
    emit(report, timestamp);
    return 0;
}

int cmd_codings(const std::string& sub, const std::string& coding_text,
                const std::string& beta_text, int depth, bool timestamp) {
    const EPCoding coding = EPCoding::parse(coding_text);
    Report report;
    report.beta = beta_text.empty() ? "" : parse_beta(beta_text).value().str();
    report.command = "codings " + sub;
    report.results["coding"] = coding.str();
    if (sub == "count") {
        const CodingCount count = count_codings(coding);
        if (count.continuum) {
            report.results["kind"] = "continuum";
        } else {
            report.results["kind"] = "finite";
            report.results["m"] = count.m;
            report.results["codings"] = 1L << count.m;
        }
    } else if (sub == "enumerate") {
        const auto words = enumerate_codings(coding, depth);
        json list = json::array();
        for (const Word& w : words) list.push_back(word_str(w));
        report.results["depth"] = depth;
        report.results["prefixes"] = list;
        report.results["count"] = words.size();
    } else {  // eval
        if (beta_text.empty()) throw ParseError("eval needs --beta");
        const Beta beta = parse_beta(beta_text);
        report.results["value"] = eval_coding(beta, coding).str();
        report.results["unique"] = is_unique(coding);
    }
    emit(report, timestamp);
    return 0;
}

int cmd_geometry(const std::string& sub, const std::string& beta_text, int level,
                 const std::string& out_path, bool timestamp) {
    const Beta beta = parse_beta(beta_text);
    if (level < 0 || level > 12) throw ParseError("level must be in [0, 12]");
    Report report;
    report.beta = beta.value().str();
    report.command = "geometry " + sub;
    report.results["level"] = level;
    if (sub == "levels") {
        const IntervalSet set = level_intervals(beta, level);
        json list = json::array();
        for (const Interval& p : set.parts()) list.push_back(interval_json(p));
        report.results["intervals"] = list;
        report.results["count"] = set.parts().size();
        report.results["total_length"] = set.total_length().str();
    } else if (sub == "holes") {
        if (level < 1) throw ParseError("holes need --level >= 1");
        json list = json::array();
        for (const Interval& h : holes(beta, level)) list.push_back(interval_json(h));
        report.results["holes"] = list;
    } else {  // svg
        const std::string svg = render_levels_svg(beta, level);
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw Error("cannot write " + out_path);
        f << svg;
        report.results["out"] = out_path;
        report.results["bytes"] = svg.size();
    }
    emit(report, timestamp);
    return 0;
}

json classify_json(const ClassifyResult& result, const Beta& beta) {
    json j;
    if (const auto* g = std::get_if<GeneratingVerdict>(&result)) {
        const AffineMap map = compose_word(beta, g->word);
        j["verdict"] = "generating";
        j["word"] = word_str(g->word);
        j["scale"] = map.scale.str();
        j["offset"] = map.offset.str();
    } else if (const auto* r = std::get_if<RefutationEvidence>(&result)) {
        j["verdict"] = "refuted";
        j["method"] = r->method;
        j["depth"] = r->depth;
        if (r->witness) j["witness"] = r->witness->str();
        if (r->point) j["witness_value"] = r->point->str();
        if (r->image) j["image"] = r->image->str();
        if (r->hole) j["hole"] = json::array({r->hole->lo.str(), r->hole->hi.str()});
    } else {
        j["verdict"] = "undetermined";
        j["depth"] = std::get<UndeterminedVerdict>(result).depth;
    }
    return j;
}

int cmd_embed(const std::string& beta_text, const std::string& mu_text, const std::string& b_text,
              int depth, bool timestamp) {
    const Beta beta = parse_beta(beta_text);
    const CandidateMap g{Rat::parse(mu_text), Rat::parse(b_text)};
    const ClassifyResult result = classify_map(beta, g, depth);
    Report report;
    report.beta = beta.value().str();
    report.command = "embed classify";
    report.results["mu"] = g.mu.str();
    report.results["b"] = g.b.str();
    report.results["classification"] = classify_json(result, beta);
    if (std::holds_alternative<UndeterminedVerdict>(result)) report.status = "partial";
    emit(report, timestamp);
    return 0;
}

int cmd_spectrum(const std::string& beta_text, int max_len, bool timestamp) {
    const Beta beta = parse_beta(beta_text);
    if (max_len < 1 || max_len > 14) throw ParseError("--max-len must be in [1, 14]");
    const SpectrumResult r = spectrum_search(beta, max_len);
    Report report;
    report.beta = beta.value().str();
    report.command = "spectrum";
    report.results["max_len"] = max_len;
    report.results["min_value"] = r.min_value.str();
    report.results["witness"] = diff_vector_str(r.witness);
    report.results["witness_length"] = r.length;
    json per = json::array();
    for (size_t i = 0; i < r.per_length.size(); ++i)
        per.push_back(json{{"length", i + 1},
                           {"min", r.per_length[i].str()},
                           {"witness", diff_vector_str(r.per_length_witness[i])}});
    report.results["per_length"] = per;
    report.results["note"] = "verified up to max_len; the infimum over all lengths is not claimed";
    emit(report, timestamp);
    return 0;
}

int cmd_verify(const std::string& beta_text, int level, bool timestamp) {
    const Beta beta = parse_beta(beta_text);
    const auto checks = run_verification_suite(beta, level);
    Report report;
    report.beta = beta.value().str();
    report.command = "verify all";
    bool all_ok = true;
    json list = json::array();
    for (const CheckResult& c : checks) {
        list.push_back(json{{"name", c.name}, {"ok", c.ok}, {"details", c.details}});
        if (!c.ok && all_ok) {
            all_ok = false;
            report.results["first_failure"] = c.name;
        }
    }
    report.results["checks"] = list;
    report.status = all_ok ? "pass" : "fail";
    emit(report, timestamp);
    return all_ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for the overlapping three-map attractor with base >= 3"};
    app.require_subcommand(1);
    bool timestamp = false;
    app.add_flag("--timestamp", timestamp, "include a timestamp in the report");

    std::string beta_text, coding_text, mu_text, b_text, out_path;
    int level = 8, depth = 8, coding_depth = 12, max_len = 10;
    double tol = 1e-12;

    auto* dims = app.add_subcommand("dims", "characteristic polynomials, radii, dimensions");
    dims->add_option("--beta", beta_text, "base as p/q or integer")->required();
    dims->add_option("--tol", tol, "root bracket width");

    auto* codings = app.add_subcommand("codings", "coding evaluation / counting / enumeration");
    codings->require_subcommand(1);
    for (const char* name : {"count", "enumerate", "eval"}) {
        auto* sub = codings->add_subcommand(name);
        sub->add_option("--coding", coding_text, "coding as pre|period over {0,1,B}")->required();
        sub->add_option("--beta", beta_text, "base as p/q (needed for eval)");
        sub->add_option("--depth", coding_depth, "prefix depth for enumerate");
    }

    auto* geometry = app.add_subcommand("geometry", "level intervals, holes, figure rendering");
    geometry->require_subcommand(1);
    for (const char* name : {"levels", "holes", "svg"}) {
        auto* sub = geometry->add_subcommand(name);
        sub->add_option("--beta", beta_text)->required();
        sub->add_option("--level", level, "level n <= 12")->required();
        if (std::string(name) == "svg") sub->add_option("--out", out_path, "output file")->required();
    }

    auto* embed = app.add_subcommand("embed", "classify affine self-embedding candidates");
    auto* classify = embed->add_subcommand("classify");
    classify->add_option("--beta", beta_text)->required();
    classify->add_option("--mu", mu_text, "contraction ratio as p/q")->required();
    classify->add_option("--b", b_text, "translation as p/q")->required();
    classify->add_option("--depth", depth, "search depth");
    embed->require_subcommand(1);

    auto* spectrum = app.add_subcommand("spectrum", "minimal nonzero |sum d_i beta^i|");
    spectrum->add_option("--beta", beta_text)->required();
    spectrum->add_option("--max-len", max_len, "lengths to certify, 1..14")->required();

    auto* verify = app.add_subcommand("verify", "batch verification");
    auto* verify_all = verify->add_subcommand("all");
    verify_all->add_option("--beta", beta_text)->required();
    verify_all->add_option("--level", level, "depth for geometric checks");
    verify->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (dims->parsed()) return cmd_dims(beta_text, tol, timestamp);
        if (codings->parsed()) {
            const std::string sub = codings->get_subcommands().front()->get_name();
            return cmd_codings(sub, coding_text, beta_text, coding_depth, timestamp);
        }
        if (geometry->parsed()) {
            const std::string sub = geometry->get_subcommands().front()->get_name();
            return cmd_geometry(sub, beta_text, level, out_path, timestamp);
        }
        if (embed->parsed()) return cmd_embed(beta_text, mu_text, b_text, depth, timestamp);
        if (spectrum->parsed()) return cmd_spectrum(beta_text, max_len, timestamp);
        if (verify->parsed()) return cmd_verify(beta_text, level, timestamp);
    } catch (const ValueBelowThree& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
