#include "ccw/decompose.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "ccw/error.hpp"

namespace ccw {

const char* to_string(factor_kind kind) noexcept {
    return kind == factor_kind::terminal ? "terminal" : "co_bipartite";
}

namespace {

graph complete_minus(std::size_t n, const std::vector<edge>& removed) {
    std::vector<vertex_row> rows(n, vertex_row(n));
    for (std::size_t v = 0; v < n; ++v) {
        rows[v].set();
        rows[v].reset(v);
    }
    for (auto [u, v] : removed) {
        rows[u].reset(v);
        rows[v].reset(u);
    }
    return graph::from_rows(std::move(rows));
}

std::string edge_text(vertex u, vertex v) {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

ordered_cover block_cover(const ordered_cover& c, int w) {
    if (w < 1) throw error(error_code::invalid_argument, "block width must be at least 1");
    if (c.parts.empty()) throw error(error_code::invalid_argument, "block cover of an empty cover");
    ordered_cover out;
    for (std::size_t i = 0; i < c.parts.size(); i += static_cast<std::size_t>(w)) {
        vertex_list block;
        const std::size_t end = std::min(c.parts.size(), i + static_cast<std::size_t>(w));
        for (std::size_t j = i; j < end; ++j) block.insert(block.end(), c.parts[j].begin(), c.parts[j].end());
        std::sort(block.begin(), block.end());
        out.parts.push_back(std::move(block));
    }
    return out;
}

decomposition decompose(const graph& g, const ordered_cover& c) {
    const auto part_of = part_index(g, c);
    const int width = cover_width(g, c);
    const int terminal_from = std::max(width, 1);
    const std::size_t n = g.order();

    // Non-edges bucketed by part distance; the last bucket is the terminal one.
    std::vector<std::vector<edge>> removed(static_cast<std::size_t>(terminal_from));
    std::vector<arc> arcs;
    for (auto [u, v] : complement(g).edges()) {
        const int distance = std::abs(part_of[u] - part_of[v]);
        if (distance >= terminal_from) {
            removed.back().emplace_back(u, v);
            arcs.push_back(part_of[u] < part_of[v] ? arc{u, v} : arc{v, u});
        } else {
            removed[distance - 1].emplace_back(u, v);
        }
    }

    decomposition d;
    d.source_cover = c;
    d.width = width;
    for (int i = 1; i < terminal_from; ++i) {
        factor f;
        f.kind = factor_kind::co_bipartite;
        f.h = complete_minus(n, removed[i - 1]);
        for (std::size_t v = 0; v < n; ++v) {
            const int block = part_of[v] / i;
            (block % 2 == 1 ? f.side_odd : f.side_even).push_back(static_cast<vertex>(v));
        }
        d.factors.push_back(std::move(f));
    }
    factor terminal;
    terminal.kind = factor_kind::terminal;
    terminal.h = complete_minus(n, removed.back());
    terminal.complement_orientation = orientation(n, arcs);
    terminal.block_cover = block_cover(c, terminal_from);
    d.factors.push_back(std::move(terminal));
    return d;
}

decomposition_report verify_decomposition(const graph& g, const decomposition& d) {
    decomposition_report r;
    const std::size_t n = g.order();
    auto fail = [](check_result& check, const std::string& detail) {
        if (check.passed) check.detail = detail;
        check.passed = false;
    };

    const auto cover_check = validate_cover(g, d.source_cover);
    if (!cover_check.valid()) {
        fail(r.structure, "source cover invalid: " + cover_check.summary());
        return r;
    }
    const auto part_of = part_index(g, d.source_cover);
    const int width = cover_width(g, d.source_cover);
    const auto expected = static_cast<std::size_t>(std::max(width, 1));
    if (d.factors.size() != expected) {
        fail(r.structure, "expected " + std::to_string(expected) + " factors, found " +
                              std::to_string(d.factors.size()));
    }
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
        const bool last = i + 1 == d.factors.size();
        const auto want = last ? factor_kind::terminal : factor_kind::co_bipartite;
        if (d.factors[i].kind != want) {
            fail(r.structure, "factor " + std::to_string(i + 1) + " should be " + to_string(want));
        }
        if (d.factors[i].h.order() != n) {
            fail(r.structure, "factor " + std::to_string(i + 1) + " has the wrong vertex count");
        }
    }
    if (!r.structure.passed) return r;

    // (a)
    for (std::size_t i = 0; i < d.factors.size() && r.supergraphs.passed; ++i) {
        for (auto [u, v] : g.edges()) {
            if (!d.factors[i].h.adjacent(u, v)) {
                fail(r.supergraphs, "edge " + edge_text(u, v) + " missing from H_" + std::to_string(i + 1));
                break;
            }
        }
    }

    // (b)
    std::vector<graph> hs;
    for (const auto& f : d.factors) hs.push_back(f.h);
    const graph meet = intersect(hs);
    if (!(meet == g)) {
        for (std::size_t u = 0; u < n && r.intersection.passed; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                const auto a = static_cast<vertex>(u), b = static_cast<vertex>(v);
                if (meet.adjacent(a, b) != g.adjacent(a, b)) {
                    fail(r.intersection, "pair " + edge_text(a, b) +
                                             (g.adjacent(a, b) ? " is an edge of G missing from the intersection"
                                                               : " is a non-edge of G present in every factor"));
                    break;
                }
            }
        }
    }

    // (c)
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
        const auto& f = d.factors[i];
        if (f.kind != factor_kind::co_bipartite) continue;
        std::vector<int> side(n, -1);
        bool ok = true;
        for (auto [list, label] : {std::pair{&f.side_odd, 0}, std::pair{&f.side_even, 1}}) {
            for (vertex v : *list) {
                if (v < 0 || static_cast<std::size_t>(v) >= n || side[v] != -1) {
                    fail(r.bipartitions, "H_" + std::to_string(i + 1) + " witness is not a partition");
                    ok = false;
                    break;
                }
                side[v] = label;
            }
        }
        if (ok && std::count(side.begin(), side.end(), -1) != 0) {
            fail(r.bipartitions, "H_" + std::to_string(i + 1) + " witness does not cover V");
            ok = false;
        }
        if (!ok) continue;
        for (auto [u, v] : complement(f.h).edges()) {
            if (side[u] == side[v]) {
                fail(r.bipartitions, "complement edge " + edge_text(u, v) + " of H_" +
                                         std::to_string(i + 1) + " lies inside one side");
                break;
            }
        }
    }

    // (d), (e)
    const auto& t = d.factors.back();
    const auto& o = t.complement_orientation;
    if (o.order() != n) {
        fail(r.orientation, "orientation has the wrong vertex count");
    } else {
        if (!verify_transitive(o)) fail(r.orientation, "terminal orientation is not transitive");
        if (!(o.underlying() == complement(t.h))) {
            fail(r.orientation, "orientation arcs differ from the terminal complement's edges");
        }
        for (auto [u, v] : o.arcs()) {
            if (part_of[u] >= part_of[v]) {
                fail(r.orientation, "arc (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") does not point to a later part");
                break;
            }
        }
    }
    const auto block_check = validate_cover(t.h, t.block_cover);
    if (!block_check.valid()) {
        fail(r.block_cover, "block cover invalid: " + block_check.summary());
    } else if (const int w = cover_width(t.h, t.block_cover); w > 1) {
        fail(r.block_cover, "block cover has width " + std::to_string(w));
    }
    return r;
}

}  // namespace ccw
