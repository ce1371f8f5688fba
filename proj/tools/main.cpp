// Command-line front end: analyze a path, convert between multichains and
// tableaux, run the verification suites, render figures.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage/parse error.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "shc/bijections.hpp"
#include "shc/formulas.hpp"
#include "shc/io.hpp"
#include "shc/oracles.hpp"
#include "shc/render.hpp"
#include "shc/verify.hpp"

namespace {

using json = nlohmann::json;

// Ordered key/value report with identical JSON and table renderings.
struct Report {
    std::vector<std::pair<std::string, std::string>> fields;

    void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
    void add(const std::string& key, const shc::Int& value) { add(key, value.str()); }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }

    std::string render(const std::string& format) const {
        if (format == "json") {
            json j = json::object();
            for (const auto& [k, v] : fields) j[k] = v;
            return j.dump(2) + "\n";
        }
        size_t width = 0;
        for (const auto& [k, v] : fields) width = std::max(width, k.size());
        std::string out;
        for (const auto& [k, v] : fields) {
            out += k;
            out += std::string(width - k.size(), ' ');
            out += "  ";
            out += v;
            out += '\n';
        }
        return out;
    }
};

void emit(const Report& report, const std::string& format, const std::string& out_file) {
    std::string text = report.render(format);
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) throw shc::check_error("io", "cannot open output file: " + out_file);
        out << text;
    }
}

std::string read_input(const std::string& in_file) {
    if (in_file.empty() || in_file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(in_file, std::ios::binary);
    if (!in) throw shc::check_error("io", "cannot open input file: " + in_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int enumeration_cap() {
    if (const char* env = std::getenv("SHIFTED_CHAINS_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 12;
}

std::string join_csv(const std::vector<int>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out;
}

int cmd_analyze(const std::string& word, bool cross_check, int k_opt, int mu_opt,
                const std::string& format, const std::string& out_file) {
    shc::Path p = shc::Path::parse(word);
    Report rep;
    rep.add("path", p.empty() ? "-" : p.word());
    rep.add("n", p.size());
    rep.add("upsteps", p.ups());
    rep.add("downsteps", p.downs());
    rep.add("heights", join_csv(p.heights()));
    auto prof = shc::valley_peak_profile(p);
    std::string vtext, ptext;
    for (const auto& v : prof.valleys)
        vtext += "(" + std::to_string(v.position) + "," + std::to_string(v.height) + ")";
    for (const auto& q : prof.peaks)
        ptext += "(" + std::to_string(q.position) + "," + std::to_string(q.height) + ")";
    rep.add("valleys", vtext.empty() ? "none" : vtext);
    rep.add("peaks", ptext.empty() ? "none" : ptext);
    rep.add("lv", prof.low_valley ? std::to_string(*prof.low_valley) : "none");
    rep.add("hv", prof.high_valley ? std::to_string(*prof.high_valley) : "none");
    auto cls = shc::classify(p);
    rep.add("class", std::string(cls.is_dyck ? "dyck" : cls.is_dyck_prefix ? "dyck-prefix"
                                 : cls.is_dyck_suffix                      ? "dyck-suffix"
                                                                           : "general"));
    rep.add("degree", static_cast<long long>(shc::degree(p)));
    shc::Path stripped = shc::strip_leading_ups(p);
    if (!stripped.empty()) {
        rep.add("shape", join_csv(shc::shape_of(stripped).parts()));
        rep.add("saturated_chains", shc::saturated_count(p));
    } else {
        rep.add("shape", "empty");
        rep.add("saturated_chains", "0");
    }
    shc::FResult fr = shc::f_recursive(p, std::max(12, p.size() + 2));
    rep.add("f", fr.value);
    if (cross_check) {
        rep.add("f_recursive", fr.value);
        rep.add("f_tableaux", shc::f_by_tableaux(p));
        rep.add("f_bruteforce", shc::oracle::f_bruteforce(p));
    }
    if (k_opt > 0) {
        rep.add("multichains_k", static_cast<long long>(k_opt));
        rep.add("multichains",
                stripped.empty() ? shc::Int(1)
                                 : shc::count_weak(shc::shape_of(stripped), k_opt));
        if (mu_opt > 0)
            rep.add("multichains_exact_mu", shc::multichain_count_exact(p, k_opt, mu_opt));
    }
    emit(rep, format, out_file);
    if (cross_check) {
        shc::Int tab = shc::f_by_tableaux(p);
        shc::Int brute = shc::oracle::f_bruteforce(p);
        if (fr.value != tab || fr.value != brute) return 1;
    }
    return 0;
}

int cmd_convert(const std::string& direction, int k, const std::string& in_file,
                const std::string& format, const std::string& out_file) {
    std::string payload = read_input(in_file);
    Report rep;
    if (direction == "chain-to-tableau") {
        shc::Multichain chain = shc::multichain_from_text(payload);
        shc::ShiftedTableau t = shc::theta(chain);
        rep.add("direction", direction);
        rep.add("k", static_cast<long long>(chain.length()));
        rep.add("tableau", shc::tableau_to_json(t).dump());
        auto via_t = shc::classify_via_theta(t, chain.length());
        auto direct = shc::classify_multichain(chain, true);
        rep.add("chain", std::string(direct.is_chain ? "yes" : "no"));
        rep.add("small_intervals", std::string(direct.small_intervals ? "yes" : "no"));
        rep.add("saturated", std::string(direct.is_saturated ? "yes" : "no"));
        rep.add("flags_agree", std::string(via_t.is_chain == direct.is_chain &&
                                                   via_t.small_intervals == direct.small_intervals &&
                                                   via_t.is_saturated == direct.is_saturated
                                               ? "yes"
                                               : "no"));
        emit(rep, format, out_file);
        return 0;
    }
    if (direction == "tableau-to-chain") {
        if (k <= 0) throw shc::check_error("usage", "--k is required for tableau-to-chain");
        shc::ShiftedTableau t = shc::tableau_from_json(json::parse(payload));
        shc::Multichain chain = shc::theta_inv(t, k);
        rep.add("direction", direction);
        rep.add("k", static_cast<long long>(k));
        std::string text = shc::multichain_to_text(chain);
        // one path per line, bottom first; encoded as a single field with \n
        rep.add("multichain", text);
        auto via_t = shc::classify_via_theta(t, k);
        rep.add("chain", std::string(via_t.is_chain ? "yes" : "no"));
        rep.add("small_intervals", std::string(via_t.small_intervals ? "yes" : "no"));
        rep.add("saturated", std::string(via_t.is_saturated ? "yes" : "no"));
        emit(rep, format, out_file);
        return 0;
    }
    throw shc::check_error("usage", "unknown direction: " + direction);
}

int cmd_verify(int max_n, std::vector<std::string> suites, const std::string& format,
               const std::string& out_file) {
    int cap = enumeration_cap();
    if (max_n > cap)
        throw shc::check_error("usage", "--max-n " + std::to_string(max_n) +
                                            " exceeds the enumeration cap " + std::to_string(cap));
    if (suites.empty()) suites = shc::suite_names();
    std::sort(suites.begin(), suites.end());
    Report rep;
    bool all_ok = true;
    for (const auto& name : suites) {
        shc::SuiteReport sr = shc::run_suite(name, max_n);
        all_ok = all_ok && sr.ok;
        std::ostringstream line;
        line << (sr.ok ? "pass" : "FAIL") << " (" << sr.instances << " instances";
        if (sr.sampled > 0) line << ", " << sr.sampled << " sampled";
        line << ", " << std::fixed << sr.seconds << "s)";
        if (!sr.ok) line << " counterexample: " << sr.counterexample;
        rep.add(name, line.str());
    }
    rep.add("result", std::string(all_ok ? "ok" : "mismatch"));
    emit(rep, format, out_file);
    return all_ok ? 0 : 1;
}

int cmd_figure(const std::string& object, const std::string& fig_format, const std::string& word,
               const std::string& in_file, int k, const std::string& out_file) {
    shc::FigureFormat fmt;
    if (fig_format == "svg")
        fmt = shc::FigureFormat::svg;
    else if (fig_format == "tikz")
        fmt = shc::FigureFormat::tikz;
    else
        throw shc::check_error("usage", "unknown figure format: " + fig_format);
    std::string rendered;
    if (object == "path") {
        rendered = shc::render_path(shc::Path::parse(word), fmt);
    } else if (object == "tableau") {
        rendered = shc::render_tableau(shc::tableau_from_json(json::parse(read_input(in_file))), fmt);
    } else if (object == "multichain") {
        rendered = shc::render_multichain(shc::multichain_from_text(read_input(in_file)), fmt);
    } else {
        throw shc::check_error("usage", "unknown figure object: " + object);
    }
    (void)k;
    if (out_file.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) throw shc::check_error("io", "cannot open output file: " + out_file);
        out << rendered;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary-path lattice, shifted tableaux, and chain enumeration"};
    app.require_subcommand(1);

    std::string path_word, format = "table", out_file, in_file, direction, object,
                fig_format = "svg";
    bool cross_check = false;
    int k = 0, mu = 0, max_n = 8;
    std::vector<std::string> suites;

    auto* analyze = app.add_subcommand("analyze", "path statistics, shape, degree, f, counts");
    analyze->add_option("--path", path_word, "path word over {u,d}")->required();
    analyze->add_flag("--cross-check", cross_check, "compute f by all three routes");
    analyze->add_option("--k", k, "report the number of multichains of length k");
    analyze->add_option("--mu", mu, "with --k: multichains whose first mu members equal P");
    analyze->add_option("--format", format, "json or table");
    analyze->add_option("--out", out_file, "write the report to a file");

    auto* convert = app.add_subcommand("convert", "multichain <-> shifted tableau");
    convert->add_option("--direction", direction, "chain-to-tableau or tableau-to-chain")
        ->required();
    convert->add_option("--k", k, "multichain length (tableau-to-chain)");
    convert->add_option("--in", in_file, "input file (default stdin)");
    convert->add_option("--format", format, "json or table");
    convert->add_option("--out", out_file, "write the report to a file");

    auto* verify = app.add_subcommand("verify", "run oracle-backed verification suites");
    verify->add_option("--max-n", max_n, "word-length bound (default 8)");
    verify->add_option("--suite", suites, "suite name, repeatable (default: all)");
    verify->add_option("--format", format, "json or table");
    verify->add_option("--out", out_file, "write the report to a file");

    auto* figure = app.add_subcommand("figure", "render a path, tableau, or multichain");
    figure->add_option("--object", object, "path, tableau, or multichain")->required();
    figure->add_option("--path", path_word, "path word (object=path)");
    figure->add_option("--in", in_file, "input file (tableau JSON / multichain text)");
    figure->add_option("--figure-format", fig_format, "svg or tikz");
    figure->add_option("--out", out_file, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(path_word, cross_check, k, mu, format, out_file);
        if (convert->parsed()) return cmd_convert(direction, k, in_file, format, out_file);
        if (verify->parsed()) return cmd_verify(max_n, suites, format, out_file);
        if (figure->parsed())
            return cmd_figure(object, fig_format, path_word, in_file, k, out_file);
    } catch (const shc::check_error& e) {
        std::cerr << "error [" << e.code << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
