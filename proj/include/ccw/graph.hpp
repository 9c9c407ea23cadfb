#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ccw {

using vertex = int;
using edge = std::pair<vertex, vertex>;
using vertex_list = std::vector<vertex>;
using vertex_row = boost::dynamic_bitset<std::uint64_t>;

// Simple undirected graph on 0..n-1. Immutable once built.
class graph {
public:
    graph() = default;
    explicit graph(std::size_t n);

    // Duplicate pairs collapse; (u,u) throws self_loop; out-of-range throws
    // index_out_of_range.
    graph(std::size_t n, std::span<const edge> edges);
    graph(std::size_t n, std::initializer_list<edge> edges)
        : graph(n, std::span<const edge>(edges.begin(), edges.size())) {}

    // Rows must be symmetric and loop-free; checked.
    static graph from_rows(std::vector<vertex_row> rows);

    std::size_t order() const noexcept { return rows_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    bool adjacent(vertex u, vertex v) const;
    const vertex_row& neighbors(vertex v) const;
    vertex_list neighbor_list(vertex v) const;
    std::size_t degree(vertex v) const;
    std::size_t max_degree() const;

    // Edges (u,v) with u < v, sorted lexicographically.
    std::vector<edge> edges() const;

    friend bool operator==(const graph& a, const graph& b) { return a.rows_ == b.rows_; }

private:
    void check_vertex(vertex v) const;

    std::vector<vertex_row> rows_;
    std::size_t edge_count_ = 0;
};

graph build_graph(std::size_t n, std::span<const edge> edges);

graph complement(const graph& g);

struct induced_result {
    graph subgraph;
    vertex_list mapping;  // mapping[i] = original vertex of new vertex i
};

// Vertices of s are relabelled in ascending order.
induced_result induced_subgraph(const graph& g, std::span<const vertex> s);

// Connected components, each sorted, ordered by smallest member.
std::vector<vertex_list> components(const graph& g);

bool is_connected(const graph& g);
bool is_clique(const graph& g, std::span<const vertex> s);
bool is_independent(const graph& g, std::span<const vertex> s);

// Edge-set intersection of graphs on a common vertex set.
graph intersect(std::span<const graph> graphs);

// 64-bit adjacency masks; throws limit_exceeded when n > 64.
std::vector<std::uint64_t> adjacency_masks(const graph& g);

namespace gen {

graph path(std::size_t n);
graph cycle(std::size_t n);
graph complete(std::size_t n);
graph star(std::size_t leaves);  // centre 0
graph grid(std::size_t rows, std::size_t cols);

// Two cliques of the given sizes plus the listed cross edges.
graph two_cliques(std::size_t a, std::size_t b, std::span<const edge> cross);

// G(n, p); deterministic per seed.
graph random_gnp(std::size_t n, double p, std::uint64_t seed);

// G(n, p) conditioned on connectivity by adding a random spanning tree first.
graph random_connected(std::size_t n, double p, std::uint64_t seed);

// Two cliques on a random split of V with random cross edges.
graph random_cobipartite(std::size_t n, double p, std::uint64_t seed);

// Three 4-cliques in a row joined by single edges x1x2 and x2x3.
graph three_clique_chain();

}  // namespace gen

}  // namespace ccw
