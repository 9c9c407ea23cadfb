// ccw: command-line front end for clique cover width computations.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccw/cover.hpp"
#include "ccw/decompose.hpp"
#include "ccw/error.hpp"
#include "ccw/incomparability.hpp"
#include "ccw/io.hpp"
#include "ccw/oracles.hpp"
#include "ccw/ramsey.hpp"

namespace fs = std::filesystem;
using ccw::io::json;

namespace {

enum exit_code : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_limit = 3,
    exit_verification = 4,
    exit_recognition = 5,
};

int exit_for(ccw::error_code code) {
    using ccw::error_code;
    switch (code) {
    case error_code::parse_error:
    case error_code::index_out_of_range:
    case error_code::self_loop:
    case error_code::invalid_query:
    case error_code::invalid_argument:
    case error_code::not_a_permutation:
        return exit_parse;
    case error_code::limit_exceeded:
        return exit_limit;
    case error_code::invalid_cover:
    case error_code::not_transitive:
    case error_code::not_an_intersection:
    case error_code::degenerate_width:
        return exit_verification;
    case error_code::not_incomparability:
    case error_code::cyclic_orientation:
        return exit_recognition;
    }
    return exit_usage;
}

std::string fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ccw::error(ccw::error_code::invalid_argument, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct options {
    std::string format;
    int limits_n = 0;
    long long limits_time = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::vector<std::string> argv;
};

// Accumulates one run's report and witness files.
class run {
public:
    explicit run(const options& opt) : opt_(opt), start_(std::chrono::steady_clock::now()) {
        report_["command"] = opt.argv;
        report_["input_digest"] = nullptr;
        report_["results"] = json::object();
        report_["witness_files"] = json::array();
        report_["notices"] = json::array();
    }

    json& results() { return report_["results"]; }
    void notice(const std::string& text) { report_["notices"].push_back(text); }

    ccw::graph load_graph(const std::string& path) {
        const auto text = read_text(path);
        report_["input_digest"] = fnv1a(text);
        return ccw::io::parse_graph(text, input_format(path));
    }

    ccw::search_limits limits(ccw::search_limits base) const {
        if (opt_.limits_n > 0) base.max_n = opt_.limits_n;
        if (opt_.limits_time > 0) base.time_budget = std::chrono::milliseconds{opt_.limits_time};
        return base;
    }

    void write(const std::string& name, const std::string& contents) {
        if (opt_.out.empty()) return;
        fs::create_directories(opt_.out);
        const fs::path path = fs::path(opt_.out) / name;
        std::ofstream(path, std::ios::binary) << contents;
        report_["witness_files"].push_back(path.generic_string());
    }

    void write_json(const std::string& name, const json& j) { write(name, j.dump(2) + "\n"); }

    int finish(int code) {
        report_["exit_code"] = code;
        report_["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        std::cout << report_.dump(2) << std::endl;
        return code;
    }

    int fail(const ccw::error& e) {
        report_["error"] = {{"kind", ccw::to_string(e.code())}, {"message", e.what()}};
        std::cerr << "ccw: " << ccw::to_string(e.code()) << ": " << e.what() << "\n";
        return finish(exit_for(e.code()));
    }

    const options& opt() const { return opt_; }

private:
    ccw::io::graph_format input_format(const std::string& path) const {
        if (!opt_.format.empty()) return ccw::io::parse_format(opt_.format);
        if (path.size() >= 5 && path.ends_with(".json")) return ccw::io::graph_format::json;
        return ccw::io::graph_format::edge_list;
    }

    const options& opt_;
    json report_;
    std::chrono::steady_clock::time_point start_;
};

json read_json_file(const std::string& path) { return ccw::io::parse_json(read_text(path)); }

std::string graph_file_name(const options& opt) {
    return opt.format == "json" ? "graph.json" : "graph.el";
}

ccw::io::graph_format output_format(const options& opt) {
    return opt.format == "json" ? ccw::io::graph_format::json : ccw::io::graph_format::edge_list;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clique cover width: exact oracles, decompositions, greedy bounds, Ramsey checks"};
    app.require_subcommand(1);
    app.fallthrough();

    options opt;
    opt.argv.assign(argv + 1, argv + argc);
    app.add_option("--format", opt.format, "Graph format: edge-list or json (default: by extension)");
    app.add_option("--limits-n", opt.limits_n, "Largest n for exact searches");
    app.add_option("--limits-time", opt.limits_time, "Time budget per search in milliseconds");
    app.add_option("--seed", opt.seed, "Random seed");
    app.add_option("--out", opt.out, "Directory for witness files");

    std::string input;
    std::string cover_file, orientation_file, decomposition_file, star_file, table_file;
    bool exact = false, greedy = false, assume_transitive = false, auto_cover = false, verify = false;

    auto* parse_cmd = app.add_subcommand("parse", "Parse a graph and write it back canonically");
    parse_cmd->add_option("input", input, "Graph file or -")->required();

    auto* ccw_cmd = app.add_subcommand("ccw", "Clique cover width: exact or greedy interval");
    ccw_cmd->add_option("input", input, "Graph file or -")->required();
    auto* exact_flag = ccw_cmd->add_flag("--exact", exact, "Exact search");
    auto* greedy_flag = ccw_cmd->add_flag("--greedy", greedy, "Greedy layered cover (incomparability graphs)");
    exact_flag->excludes(greedy_flag);
    ccw_cmd->add_option("--orientation", orientation_file, "Transitive orientation of the complement (JSON)");
    ccw_cmd->add_flag("--assume-transitive", assume_transitive, "Skip the transitivity check");

    auto* decompose_cmd = app.add_subcommand("decompose", "Factor a graph along an ordered clique cover");
    decompose_cmd->add_option("input", input, "Graph file or -")->required();
    auto* cover_opt = decompose_cmd->add_option("--cover", cover_file, "Ordered cover (JSON)");
    decompose_cmd->add_flag("--auto", auto_cover, "Greedy cover when recognisable, else the trivial cover")
        ->excludes(cover_opt);
    decompose_cmd->add_flag("--verify", verify, "Append the verification report");

    auto* verify_cmd = app.add_subcommand("verify", "Re-check witness files against a graph");
    verify_cmd->add_option("input", input, "Graph file or -")->required();
    verify_cmd->add_option("--decomposition", decomposition_file, "Decomposition (JSON)");
    verify_cmd->add_option("--cover", cover_file, "Ordered cover (JSON)");
    verify_cmd->add_option("--star", star_file, "Star certificate (JSON)");
    verify_cmd->add_option("--orientation", orientation_file, "Orientation of the complement (JSON)");

    auto* star_cmd = app.add_subcommand("star", "Largest induced star s(G)");
    star_cmd->add_option("input", input, "Graph file or -")->required();

    std::string gen_kind;
    std::size_t gen_n = 0;
    double gen_density = 0.5;
    std::optional<std::uint64_t> gen_seed;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance: poset, cobipartite, grid, star, random");
    gen_cmd->add_option("kind", gen_kind)->required()->check(
        CLI::IsMember({"poset", "cobipartite", "grid", "star", "random"}));
    gen_cmd->add_option("n", gen_n, "Vertices (grid: side length, star: leaves)")->required();
    gen_cmd->add_option("density", gen_density, "Arc or edge probability")->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("seed", gen_seed, "Seed (overrides --seed)");

    std::vector<int> targets;
    int corollary = 0;
    auto* ramsey_cmd = app.add_subcommand("ramsey", "Ramsey number lookup and checks");
    auto* targets_opt = ramsey_cmd->add_option("targets", targets, "Clique sizes n_1 ... n_c");
    ramsey_cmd->add_option("--corollary", corollary, "Bound s(G) from a CCW value")->excludes(targets_opt);
    ramsey_cmd->add_option("--table", table_file, "Ramsey table (JSON)");
    ramsey_cmd->add_flag("--verify", verify, "Check the value exhaustively where feasible");

    auto* stats_cmd = app.add_subcommand("stats", "Basic graph statistics");
    stats_cmd->add_option("input", input, "Graph file or -")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    run r(opt);
    try {
        if (parse_cmd->parsed()) {
            const auto g = r.load_graph(input);
            r.results()["n"] = g.order();
            r.results()["m"] = g.size();
            r.write(graph_file_name(opt), ccw::io::serialize_graph(g, output_format(opt)));
            return r.finish(exit_ok);
        }

        if (ccw_cmd->parsed()) {
            const auto g = r.load_graph(input);
            if (!greedy) {
                const auto res = ccw::ccw_exact(g, r.limits(ccw::default_limits::ccw));
                r.results()["mode"] = "exact";
                r.results()["ccw"] = res.width;
                r.results()["cover"] = ccw::io::to_json(res.cover);
                r.write_json("cover.json", ccw::io::to_json(res.cover));
                return r.finish(exit_ok);
            }
            std::optional<ccw::orientation> ghat;
            if (!orientation_file.empty()) {
                ghat = ccw::io::orientation_from_json(read_json_file(orientation_file));
            } else {
                r.notice("no orientation given: complement oriented by search, not linear time");
            }
            const auto res = ccw::ccw_two_approx(g, ghat, r.limits(ccw::default_limits::orientation),
                                                 !assume_transitive);
            r.results()["mode"] = "greedy";
            r.results()["interval"] = {res.lower, res.upper};
            r.results()["lower"] = res.lower;
            r.results()["upper"] = res.upper;
            r.results()["cover"] = ccw::io::to_json(res.witness_cover);
            r.results()["star"] = ccw::io::to_json(res.witness_star);
            r.write_json("cover.json", ccw::io::to_json(res.witness_cover));
            r.write_json("star.json", ccw::io::to_json(res.witness_star));
            return r.finish(exit_ok);
        }

        if (decompose_cmd->parsed()) {
            const auto g = r.load_graph(input);
            ccw::ordered_cover c;
            if (!cover_file.empty()) {
                c = ccw::io::cover_from_json(read_json_file(cover_file));
                r.results()["cover_source"] = "file";
            } else {
                std::optional<ccw::orientation> ghat;
                try {
                    ghat = ccw::find_transitive_orientation(ccw::complement(g),
                                                            r.limits(ccw::default_limits::orientation));
                } catch (const ccw::error& e) {
                    if (e.code() != ccw::error_code::limit_exceeded) throw;
                }
                if (ghat) {
                    c = ccw::greedy_layered_cover(*ghat, false).cover;
                    r.results()["cover_source"] = "greedy";
                } else {
                    c = ccw::trivial_cover(g);
                    r.results()["cover_source"] = "trivial";
                }
            }
            const auto d = ccw::decompose(g, c);
            if (d.width == 0) {
                r.notice("cover width 0: every component is a clique; the single factor is G itself");
            }
            r.results()["width"] = d.width;
            r.results()["factor_count"] = d.factors.size();
            r.write_json("cover.json", ccw::io::to_json(c));
            r.write_json("decomposition.json", ccw::io::to_json(d));
            for (std::size_t i = 0; i < d.factors.size(); ++i) {
                const auto& f = d.factors[i];
                const auto name = "H" + std::to_string(i + 1);
                r.write("factor_" + std::to_string(i + 1) + ".dot",
                        ccw::io::to_dot(f.h, f.kind == ccw::factor_kind::terminal ? &f.block_cover : nullptr,
                                        name));
            }
            if (verify) {
                const auto report = ccw::verify_decomposition(g, d);
                r.results()["verification"] = ccw::io::to_json(report);
                if (!report.passed()) return r.finish(exit_verification);
            }
            return r.finish(exit_ok);
        }

        if (verify_cmd->parsed()) {
            const auto g = r.load_graph(input);
            bool ok = true;
            bool any = false;
            if (!decomposition_file.empty()) {
                any = true;
                const auto d = ccw::io::decomposition_from_json(read_json_file(decomposition_file));
                const auto report = ccw::verify_decomposition(g, d);
                r.results()["decomposition"] = ccw::io::to_json(report);
                ok = ok && report.passed();
            }
            if (!cover_file.empty()) {
                any = true;
                const auto c = ccw::io::cover_from_json(read_json_file(cover_file));
                const auto report = ccw::validate_cover(g, c);
                json cj{{"valid", report.valid()}, {"detail", report.summary()}};
                if (report.valid()) cj["width"] = ccw::cover_width(g, c);
                r.results()["cover"] = cj;
                ok = ok && report.valid();
            }
            if (!star_file.empty()) {
                any = true;
                const auto sj = read_json_file(star_file);
                ccw::star_certificate cert;
                cert.degenerate = sj.value("degenerate", false);
                cert.center = sj.at("center").is_null() ? -1 : sj.at("center").get<int>();
                cert.leaves = sj.at("leaves").get<ccw::vertex_list>();
                const auto problem = ccw::check_star(g, cert);
                r.results()["star"] = {{"valid", problem.empty()}, {"detail", problem}};
                ok = ok && problem.empty();
            }
            if (!orientation_file.empty()) {
                any = true;
                const auto o = ccw::io::orientation_from_json(read_json_file(orientation_file));
                const bool transitive = ccw::verify_transitive(o);
                const bool matches = o.order() == g.order() && o.underlying() == ccw::complement(g);
                r.results()["orientation"] = {{"transitive", transitive}, {"covers_complement", matches}};
                ok = ok && transitive && matches;
            }
            if (!any) r.notice("nothing to verify: pass --decomposition, --cover, --star or --orientation");
            r.results()["passed"] = ok;
            return r.finish(ok ? exit_ok : exit_verification);
        }

        if (star_cmd->parsed()) {
            const auto g = r.load_graph(input);
            auto limits = r.limits(ccw::default_limits::star);
            const auto res = ccw::s_exact(g, limits);
            r.results()["s"] = res.s;
            r.results()["certificate"] = ccw::io::to_json(res.certificate);
            r.results()["ccw_lower_bound"] = (res.s + 1) / 2 - 1;
            r.write_json("star.json", ccw::io::to_json(res.certificate));
            return r.finish(exit_ok);
        }

        if (gen_cmd->parsed()) {
            const std::uint64_t seed = gen_seed.value_or(opt.seed);
            ccw::graph g;
            r.results()["kind"] = gen_kind;
            r.results()["seed"] = seed;
            if (gen_kind == "poset") {
                auto inst = ccw::random_poset_graph(gen_n, gen_density, seed);
                g = inst.g;
                r.write_json("orientation.json", ccw::io::to_json(inst.ghat));
                r.results()["arcs"] = inst.ghat.arc_count();
            } else if (gen_kind == "cobipartite") {
                g = ccw::gen::random_cobipartite(gen_n, gen_density, seed);
            } else if (gen_kind == "grid") {
                g = ccw::gen::grid(gen_n, gen_n);
            } else if (gen_kind == "star") {
                g = ccw::gen::star(gen_n);
            } else {
                g = ccw::gen::random_gnp(gen_n, gen_density, seed);
            }
            r.results()["n"] = g.order();
            r.results()["m"] = g.size();
            r.write(graph_file_name(opt), ccw::io::serialize_graph(g, output_format(opt)));
            if (opt.out.empty()) r.results()["graph"] = ccw::io::to_json(g);
            return r.finish(exit_ok);
        }

        if (ramsey_cmd->parsed()) {
            const auto table = table_file.empty() ? ccw::ramsey_table::defaults()
                                                  : ccw::ramsey_table::from_json(read_text(table_file));
            if (corollary > 0) {
                const auto a = ccw::corollary_bound(corollary, table);
                r.results()["ccw"] = corollary;
                r.results()["ramsey"] = ccw::io::to_json(a);
                std::string text;
                if (a.kind == ccw::answer_kind::exact) {
                    text = "s(G) \u2264 " + std::to_string(a.value() - 1) + " (R(" + a.key + ")=" +
                           std::to_string(a.value()) + ")";
                } else if (a.kind == ccw::answer_kind::range) {
                    text = "s(G) \u2264 " + std::to_string(a.hi - 1) + " (R(" + a.key + ") in [" +
                           std::to_string(a.lo) + "," + std::to_string(a.hi) + "])";
                } else {
                    text = "R(" + a.key + ") unknown; no bound";
                }
                r.results()["bound"] = text;
                return r.finish(exit_ok);
            }
            if (targets.empty()) {
                throw ccw::error(ccw::error_code::invalid_query, "give targets or --corollary");
            }
            const ccw::ramsey_query q{targets};
            r.results()["ramsey"] = ccw::io::to_json(ccw::ramsey_lookup(q, table));
            if (verify) {
                const auto v = ccw::verify_ramsey_tiny(q, r.limits(ccw::default_limits::ramsey), table);
                r.results()["verification"] = ccw::io::to_json(v);
                if (!v.consistent()) return r.finish(exit_verification);
            }
            return r.finish(exit_ok);
        }

        if (stats_cmd->parsed()) {
            const auto g = r.load_graph(input);
            const auto comps = ccw::components(g);
            r.results()["n"] = g.order();
            r.results()["m"] = g.size();
            r.results()["components"] = comps.size();
            r.results()["max_degree"] = g.max_degree();
            const double pairs = static_cast<double>(g.order()) * (static_cast<double>(g.order()) - 1) / 2;
            r.results()["density"] = pairs > 0 ? static_cast<double>(g.size()) / pairs : 0.0;
            return r.finish(exit_ok);
        }
    } catch (const ccw::error& e) {
        return r.fail(e);
    } catch (const std::exception& e) {
        return r.fail(ccw::error(ccw::error_code::invalid_argument, e.what()));
    }
    return exit_usage;
}
