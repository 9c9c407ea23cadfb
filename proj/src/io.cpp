#include "ccw/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "ccw/error.hpp"

namespace ccw::io {

namespace {

struct token {
    std::string_view text;
    std::size_t column;
};

std::vector<token> tokenize(std::string_view line) {
    std::vector<token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

long long parse_count(const token& t, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size() || value < 0) {
        throw parse_error(line, t.column, "expected a non-negative integer, got \"" + std::string(t.text) + "\"");
    }
    return value;
}

graph parse_edge_list(std::string_view text) {
    std::size_t line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<edge> edges;
    std::size_t last_line = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        last_line = line_no;

        if (tokens[0].text == "p") {
            if (have_header) throw parse_error(line_no, tokens[0].column, "duplicate header line");
            if (tokens.size() != 3) throw parse_error(line_no, tokens[0].column, "header must be \"p <n> <m>\"");
            n = parse_count(tokens[1], line_no);
            m = parse_count(tokens[2], line_no);
            have_header = true;
        } else if (tokens[0].text == "e") {
            if (!have_header) throw parse_error(line_no, tokens[0].column, "edge before the \"p\" header");
            if (tokens.size() != 3) throw parse_error(line_no, tokens[0].column, "edge must be \"e <u> <v>\"");
            const long long u = parse_count(tokens[1], line_no);
            const long long v = parse_count(tokens[2], line_no);
            for (long long x : {u, v}) {
                if (x >= n) {
                    throw error(error_code::index_out_of_range,
                                "line " + std::to_string(line_no) + ": vertex " + std::to_string(x) +
                                    " out of range for n=" + std::to_string(n));
                }
            }
            if (u == v) {
                throw error(error_code::self_loop,
                            "line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
            }
            edges.emplace_back(static_cast<vertex>(u), static_cast<vertex>(v));
        } else {
            throw parse_error(line_no, tokens[0].column, "unknown line type \"" + std::string(tokens[0].text) + "\"");
        }
    }
    if (!have_header) throw parse_error(line_no, 1, "missing \"p <n> <m>\" header");
    if (static_cast<long long>(edges.size()) != m) {
        throw parse_error(last_line, 1, "header announces " + std::to_string(m) + " edges, found " +
                                            std::to_string(edges.size()));
    }
    return graph(static_cast<std::size_t>(n), edges);
}

[[noreturn]] void schema_error(const std::string& what) { throw parse_error(0, 0, what); }

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) schema_error(std::string(what) + " must be an integer");
    return j.get<int>();
}

vertex_list as_vertex_list(const json& j, const char* what) {
    if (!j.is_array()) schema_error(std::string(what) + " must be an array");
    vertex_list out;
    for (const auto& x : j) out.push_back(as_int(x, what));
    return out;
}

std::vector<std::pair<int, int>> as_pairs(const json& j, const char* what) {
    if (!j.is_array()) schema_error(std::string(what) + " must be an array");
    std::vector<std::pair<int, int>> out;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) schema_error(std::string(what) + " entries must be 2-arrays");
        out.emplace_back(as_int(p[0], what), as_int(p[1], what));
    }
    return out;
}

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

json vertices_json(const vertex_list& vs) {
    json out = json::array();
    for (vertex v : vs) out.push_back(v);
    return out;
}

json check_json(const check_result& c) {
    json out;
    out["passed"] = c.passed;
    out["detail"] = c.detail;
    return out;
}

}  // namespace

graph_format parse_format(std::string_view name) {
    if (name == "edge-list" || name == "edgelist" || name == "el") return graph_format::edge_list;
    if (name == "json") return graph_format::json;
    if (name == "dot") return graph_format::dot;
    throw error(error_code::invalid_argument, "unknown graph format \"" + std::string(name) + "\"");
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw parse_error(line, column, "invalid JSON");
    }
}

graph parse_graph(std::string_view text, graph_format format) {
    switch (format) {
    case graph_format::edge_list: return parse_edge_list(text);
    case graph_format::json: return graph_from_json(parse_json(text));
    case graph_format::dot: break;
    }
    throw error(error_code::invalid_argument, "DOT input is not supported");
}

std::string serialize_graph(const graph& g, graph_format format) {
    switch (format) {
    case graph_format::edge_list: {
        std::ostringstream os;
        os << "p " << g.order() << ' ' << g.size() << '\n';
        for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
        return os.str();
    }
    case graph_format::json: return to_json(g).dump() + "\n";
    case graph_format::dot: return to_dot(g);
    }
    return {};
}

std::string to_dot(const graph& g, const ordered_cover* cover, std::string_view name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    if (cover) {
        for (std::size_t i = 0; i < cover->parts.size(); ++i) {
            os << "  subgraph cluster_" << i << " {\n    label=\"C" << i << "\";\n";
            for (vertex v : cover->parts[i]) os << "    " << v << ";\n";
            os << "  }\n";
        }
    } else {
        for (std::size_t v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    }
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

json to_json(const graph& g) {
    json out;
    out["n"] = g.order();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    out["edges"] = std::move(edges);
    return out;
}

json to_json(const ordered_cover& c) {
    json parts = json::array();
    for (const auto& p : c.parts) parts.push_back(vertices_json(p));
    json out;
    out["parts"] = std::move(parts);
    return out;
}

json to_json(const orientation& o) {
    json out;
    out["n"] = o.order();
    json arcs = json::array();
    for (auto [u, v] : o.arcs()) arcs.push_back({u, v});
    out["arcs"] = std::move(arcs);
    return out;
}

json to_json(const star_certificate& s) {
    json out;
    out["center"] = s.degenerate ? json(nullptr) : json(s.center);
    out["leaves"] = vertices_json(s.leaves);
    out["degenerate"] = s.degenerate;
    return out;
}

json to_json(const decomposition& d) {
    json out;
    out["source_cover"] = to_json(d.source_cover);
    out["width"] = d.width;
    json factors = json::array();
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
        const auto& f = d.factors[i];
        json fj;
        fj["index"] = i + 1;
        fj["kind"] = to_string(f.kind);
        fj["graph"] = to_json(f.h);
        if (f.kind == factor_kind::co_bipartite) {
            fj["bipartition"] = {{"odd", vertices_json(f.side_odd)}, {"even", vertices_json(f.side_even)}};
        } else {
            fj["orientation"] = to_json(f.complement_orientation);
            fj["block_cover"] = to_json(f.block_cover);
        }
        factors.push_back(std::move(fj));
    }
    out["factors"] = std::move(factors);
    return out;
}

json to_json(const decomposition_report& r) {
    json out;
    out["passed"] = r.passed();
    out["structure"] = check_json(r.structure);
    out["a_supergraphs"] = check_json(r.supergraphs);
    out["b_intersection"] = check_json(r.intersection);
    out["c_bipartitions"] = check_json(r.bipartitions);
    out["d_orientation"] = check_json(r.orientation);
    out["e_block_cover"] = check_json(r.block_cover);
    return out;
}

json to_json(const ramsey_answer& a) {
    json out;
    out["key"] = a.key;
    out["kind"] = to_string(a.kind);
    if (a.kind == answer_kind::exact) out["value"] = a.lo;
    if (a.kind == answer_kind::range) {
        out["lo"] = a.lo;
        out["hi"] = a.hi;
    }
    return out;
}

json to_json(const ramsey_verification& v) {
    json out;
    out["targets"] = v.targets;
    out["claimed"] = to_json(v.claimed);
    out["lower_verified"] = v.lower_verified;
    out["upper_verified"] = v.upper_verified;
    out["upper_skipped"] = v.upper_skipped;
    out["notes"] = v.notes;
    return out;
}

json to_json(const intersection_verdict& v) {
    json out;
    out["status"] = to_string(v.status);
    out["s_graph"] = v.s_graph;
    out["s_factors"] = v.s_factors;
    out["bound"] = to_json(v.bound);
    return out;
}

graph graph_from_json(const json& j) {
    const int n = as_int(member(j, "n"), "n");
    if (n < 0) schema_error("n must be non-negative");
    auto pairs = as_pairs(member(j, "edges"), "edges");
    std::vector<edge> edges(pairs.begin(), pairs.end());
    return graph(static_cast<std::size_t>(n), edges);
}

ordered_cover cover_from_json(const json& j) {
    const auto& parts = member(j, "parts");
    if (!parts.is_array()) schema_error("parts must be an array");
    ordered_cover c;
    for (const auto& p : parts) c.parts.push_back(as_vertex_list(p, "parts"));
    return c;
}

orientation orientation_from_json(const json& j) {
    const int n = as_int(member(j, "n"), "n");
    if (n < 0) schema_error("n must be non-negative");
    auto pairs = as_pairs(member(j, "arcs"), "arcs");
    std::vector<arc> arcs(pairs.begin(), pairs.end());
    return orientation(static_cast<std::size_t>(n), arcs);
}

decomposition decomposition_from_json(const json& j) {
    decomposition d;
    d.source_cover = cover_from_json(member(j, "source_cover"));
    d.width = as_int(member(j, "width"), "width");
    const auto& factors = member(j, "factors");
    if (!factors.is_array()) schema_error("factors must be an array");
    for (const auto& fj : factors) {
        factor f;
        const auto& kind = member(fj, "kind");
        if (kind == "terminal") {
            f.kind = factor_kind::terminal;
        } else if (kind == "co_bipartite") {
            f.kind = factor_kind::co_bipartite;
        } else {
            schema_error("unknown factor kind");
        }
        f.h = graph_from_json(member(fj, "graph"));
        if (f.kind == factor_kind::co_bipartite) {
            const auto& bp = member(fj, "bipartition");
            f.side_odd = as_vertex_list(member(bp, "odd"), "odd");
            f.side_even = as_vertex_list(member(bp, "even"), "even");
        } else {
            f.complement_orientation = orientation_from_json(member(fj, "orientation"));
            f.block_cover = cover_from_json(member(fj, "block_cover"));
        }
        d.factors.push_back(std::move(f));
    }
    return d;
}

}  // namespace ccw::io
