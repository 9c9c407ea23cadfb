#include "ccw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ccw/error.hpp"
#include "ccw/random.hpp"

namespace ccw {

namespace {

void require_in_range(vertex v, std::size_t n) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw error(error_code::index_out_of_range,
                    "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
    }
}

}  // namespace

graph::graph(std::size_t n) : rows_(n, vertex_row(n)) {}

graph::graph(std::size_t n, std::span<const edge> edges) : graph(n) {
    for (auto [u, v] : edges) {
        require_in_range(u, n);
        require_in_range(v, n);
        if (u == v) {
            throw error(error_code::self_loop, "self-loop at vertex " + std::to_string(u));
        }
        if (!rows_[u].test(v)) {
            rows_[u].set(v);
            rows_[v].set(u);
            ++edge_count_;
        }
    }
}

graph graph::from_rows(std::vector<vertex_row> rows) {
    const std::size_t n = rows.size();
    graph g;
    std::size_t degree_sum = 0;
    for (std::size_t u = 0; u < n; ++u) {
        if (rows[u].size() != n) {
            throw error(error_code::index_out_of_range, "adjacency row has wrong width");
        }
        if (rows[u].test(u)) {
            throw error(error_code::self_loop, "self-loop at vertex " + std::to_string(u));
        }
        for (auto v = rows[u].find_first(); v != vertex_row::npos; v = rows[u].find_next(v)) {
            if (!rows[v].test(u)) {
                throw error(error_code::invalid_argument, "adjacency rows are not symmetric");
            }
        }
        degree_sum += rows[u].count();
    }
    g.rows_ = std::move(rows);
    g.edge_count_ = degree_sum / 2;
    return g;
}

void graph::check_vertex(vertex v) const { require_in_range(v, order()); }

bool graph::adjacent(vertex u, vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[u].test(v);
}

const vertex_row& graph::neighbors(vertex v) const {
    check_vertex(v);
    return rows_[v];
}

vertex_list graph::neighbor_list(vertex v) const {
    const auto& row = neighbors(v);
    vertex_list out;
    out.reserve(row.count());
    for (auto u = row.find_first(); u != vertex_row::npos; u = row.find_next(u)) {
        out.push_back(static_cast<vertex>(u));
    }
    return out;
}

std::size_t graph::degree(vertex v) const { return neighbors(v).count(); }

std::size_t graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& row : rows_) best = std::max(best, row.count());
    return best;
}

std::vector<edge> graph::edges() const {
    std::vector<edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < rows_.size(); ++u) {
        for (auto v = rows_[u].find_next(u); v != vertex_row::npos; v = rows_[u].find_next(v)) {
            out.emplace_back(static_cast<vertex>(u), static_cast<vertex>(v));
        }
    }
    return out;
}

graph build_graph(std::size_t n, std::span<const edge> edges) { return graph(n, edges); }

graph complement(const graph& g) {
    const std::size_t n = g.order();
    std::vector<vertex_row> rows;
    rows.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        vertex_row row = ~g.neighbors(static_cast<vertex>(v));
        row.reset(v);
        rows.push_back(std::move(row));
    }
    return graph::from_rows(std::move(rows));
}

induced_result induced_subgraph(const graph& g, std::span<const vertex> s) {
    vertex_list mapping(s.begin(), s.end());
    for (vertex v : mapping) require_in_range(v, g.order());
    std::sort(mapping.begin(), mapping.end());
    mapping.erase(std::unique(mapping.begin(), mapping.end()), mapping.end());

    std::vector<edge> edges;
    for (std::size_t i = 0; i < mapping.size(); ++i) {
        for (std::size_t j = i + 1; j < mapping.size(); ++j) {
            if (g.adjacent(mapping[i], mapping[j])) {
                edges.emplace_back(static_cast<vertex>(i), static_cast<vertex>(j));
            }
        }
    }
    return {graph(mapping.size(), edges), std::move(mapping)};
}

std::vector<vertex_list> components(const graph& g) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<vertex_list> out;
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        vertex_list comp;
        vertex_list stack{static_cast<vertex>(root)};
        seen[root] = true;
        while (!stack.empty()) {
            vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            const auto& row = g.neighbors(v);
            for (auto u = row.find_first(); u != vertex_row::npos; u = row.find_next(u)) {
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(static_cast<vertex>(u));
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const graph& g) { return components(g).size() <= 1; }

bool is_clique(const graph& g, std::span<const vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
        }
    }
    return true;
}

bool is_independent(const graph& g, std::span<const vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
        }
    }
    return true;
}

graph intersect(std::span<const graph> graphs) {
    if (graphs.empty()) throw error(error_code::invalid_argument, "intersection of no graphs");
    const std::size_t n = graphs.front().order();
    std::vector<vertex_row> rows;
    for (std::size_t v = 0; v < n; ++v) rows.push_back(graphs.front().neighbors(static_cast<vertex>(v)));
    for (const auto& h : graphs.subspan(1)) {
        if (h.order() != n) {
            throw error(error_code::invalid_argument, "graphs have different vertex counts");
        }
        for (std::size_t v = 0; v < n; ++v) rows[v] &= h.neighbors(static_cast<vertex>(v));
    }
    return graph::from_rows(std::move(rows));
}

std::vector<std::uint64_t> adjacency_masks(const graph& g) {
    if (g.order() > 64) {
        throw error(error_code::limit_exceeded,
                    "n=" + std::to_string(g.order()) + " exceeds the 64-vertex word size");
    }
    std::vector<std::uint64_t> masks(g.order(), 0);
    for (std::size_t v = 0; v < g.order(); ++v) {
        const auto& row = g.neighbors(static_cast<vertex>(v));
        for (auto u = row.find_first(); u != vertex_row::npos; u = row.find_next(u)) {
            masks[v] |= std::uint64_t{1} << u;
        }
    }
    return masks;
}

namespace gen {

graph path(std::size_t n) {
    std::vector<edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return graph(n, e);
}

graph cycle(std::size_t n) {
    std::vector<edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n >= 3) e.emplace_back(0, n - 1);
    return graph(n, e);
}

graph complete(std::size_t n) {
    std::vector<edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return graph(n, e);
}

graph star(std::size_t leaves) {
    std::vector<edge> e;
    for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return graph(leaves + 1, e);
}

graph grid(std::size_t rows, std::size_t cols) {
    std::vector<edge> e;
    auto id = [cols](std::size_t r, std::size_t c) { return static_cast<vertex>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    return graph(rows * cols, e);
}

graph two_cliques(std::size_t a, std::size_t b, std::span<const edge> cross) {
    std::vector<edge> e(cross.begin(), cross.end());
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = i + 1; j < a; ++j) e.emplace_back(i, j);
    for (std::size_t i = a; i < a + b; ++i)
        for (std::size_t j = i + 1; j < a + b; ++j) e.emplace_back(i, j);
    return graph(a + b, e);
}

graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
    seeded_rng rng(seed);
    std::vector<edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) e.emplace_back(i, j);
    return graph(n, e);
}

graph random_connected(std::size_t n, double p, std::uint64_t seed) {
    seeded_rng rng(seed);
    std::vector<edge> e;
    vertex_list order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    for (std::size_t i = 1; i < n; ++i) {
        e.emplace_back(order[i], order[rng.below(i)]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) e.emplace_back(i, j);
    return graph(n, e);
}

graph random_cobipartite(std::size_t n, double p, std::uint64_t seed) {
    seeded_rng rng(seed);
    std::vector<int> side(n);
    for (auto& s : side) s = static_cast<int>(rng.below(2));
    std::vector<edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (side[i] == side[j] || rng.bernoulli(p)) e.emplace_back(i, j);
    return graph(n, e);
}

graph three_clique_chain() {
    // C1 = {0..3}, C2 = {4..7}, C3 = {8..11}; x1 = 3, x2 = 4, x3 = 8.
    std::vector<edge> e;
    for (int block = 0; block < 3; ++block)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) e.emplace_back(block * 4 + i, block * 4 + j);
    e.emplace_back(3, 4);
    e.emplace_back(4, 8);
    return graph(12, e);
}

}  // namespace gen

}  // namespace ccw
