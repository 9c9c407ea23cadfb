#pragma once

#include <string>
#include <vector>

#include "ccw/graph.hpp"
#include "ccw/limits.hpp"

namespace ccw {

// Ordered clique cover C_0, ..., C_t.
struct ordered_cover {
    std::vector<vertex_list> parts;

    friend bool operator==(const ordered_cover&, const ordered_cover&) = default;
};

// A linear ordering v_0, ..., v_{n-1} of all vertices.
using ordering = vertex_list;

struct non_clique_part {
    std::size_t part;
    vertex u;
    vertex v;  // u, v in the part and not adjacent
};

struct cover_report {
    vertex_list out_of_range;
    vertex_list uncovered;
    vertex_list doubly_covered;
    std::vector<std::size_t> empty_parts;
    std::vector<non_clique_part> non_cliques;

    bool valid() const noexcept {
        return out_of_range.empty() && uncovered.empty() && doubly_covered.empty() &&
               empty_parts.empty() && non_cliques.empty();
    }
    std::string summary() const;
};

cover_report validate_cover(const graph& g, const ordered_cover& c);

// Throws invalid_cover with the report summary when c is not valid for g.
void require_valid_cover(const graph& g, const ordered_cover& c);

// part_of[v] = index of the part holding v. Requires a valid cover.
std::vector<int> part_index(const graph& g, const ordered_cover& c);

// Largest part-index gap spanned by an edge; 0 when no edge crosses parts.
int cover_width(const graph& g, const ordered_cover& c);

// Clique cover graph G(C): part i becomes vertex i.
graph quotient_graph(const graph& g, const ordered_cover& c);

int ordering_width(const graph& g, const ordering& order);

struct bandwidth_result {
    int width;
    ordering order;
};

// Exact bandwidth with the lexicographically first optimal ordering.
bandwidth_result bandwidth_exact(const graph& g,
                                 const search_limits& limits = default_limits::bandwidth);

ordered_cover trivial_cover(const graph& g);

}  // namespace ccw
