#pragma once

#include <cstdint>
#include <optional>

#include "ccw/cover.hpp"
#include "ccw/graph.hpp"
#include "ccw/limits.hpp"
#include "ccw/oracles.hpp"
#include "ccw/orientation.hpp"

namespace ccw {

// Greedy cover of an incomparability graph: layer v = longest directed path
// ending at v in the transitive orientation of the complement.
struct layered_cover {
    ordered_cover cover;
    std::vector<int> levels;
};

// Linear in |V| + |arcs| when verify is false. Throws cyclic_orientation, and
// not_transitive when verify is true and ghat is not transitive.
layered_cover greedy_layered_cover(const orientation& ghat, bool verify = true);

// Induced star with W(C) + 1 leaves read off the greedy cover: the centre
// is one end of an edge of maximal part gap, the leaves a chain of ghat
// walked back across the layers it spans. Degenerate when W(C) = 0.
star_certificate extract_star_certificate(const graph& g, const orientation& ghat,
                                          const layered_cover& lc);

struct approx_result {
    int lower;  // ceil((W + 1) / 2) - 1, a lower bound on CCW(g)
    int upper;  // W of the greedy cover
    ordered_cover witness_cover;
    star_certificate witness_star;
};

// Bounds lower <= CCW(g) <= upper with upper <= 2 CCW(g) + 1. Without ghat
// the complement is oriented by search (then not linear time); throws
// not_incomparability when the complement is not a comparability graph.
approx_result ccw_two_approx(const graph& g, const std::optional<orientation>& ghat,
                             const search_limits& limits = default_limits::orientation,
                             bool verify = true);

struct poset_instance {
    graph g;
    orientation ghat;  // transitive orientation of complement(g)
};

// Random linear order, arcs forward with the given probability, transitive
// closure as ghat, and g = complement of its underlying graph.
poset_instance random_poset_graph(std::size_t n, double density, std::uint64_t seed);

}  // namespace ccw
