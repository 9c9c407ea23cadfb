#pragma once

#include <optional>
#include <string>

#include "ccw/cover.hpp"
#include "ccw/graph.hpp"
#include "ccw/limits.hpp"
#include "ccw/orientation.hpp"

namespace ccw {

// Induced star: centre adjacent to every leaf, leaves pairwise non-adjacent.
// A degenerate certificate (edgeless host) carries no centre and no leaves.
struct star_certificate {
    vertex center = -1;
    vertex_list leaves;
    bool degenerate = false;

    friend bool operator==(const star_certificate&, const star_certificate&) = default;
};

// Empty string when the certificate is a valid induced star in g.
std::string check_star(const graph& g, const star_certificate& cert);

struct star_result {
    int s;
    star_certificate certificate;
};

// s(G): most leaves of an induced star. Graphs on at most two vertices, and
// graphs without edges, report s = 1.
star_result s_exact(const graph& g, const search_limits& limits = default_limits::star);

struct ccw_result {
    int width;
    ordered_cover cover;
};

// Exact clique cover width with an optimal ordered cover. Disconnected
// graphs take the maximum over components and concatenate their covers.
ccw_result ccw_exact(const graph& g, const search_limits& limits = default_limits::ccw);

// An ordered clique cover of width <= k, or nothing. Lexicographically
// first under the canonical part enumeration.
std::optional<ordered_cover> cover_within(const graph& g, int k,
                                          const search_limits& limits = default_limits::ccw);

// CCW(g) <= 1; cliques count.
bool is_unit_incomparability(const graph& g, const search_limits& limits = default_limits::ccw);

// A transitive orientation of g's edges, or nothing when g is not a
// comparability graph.
std::optional<orientation> find_transitive_orientation(
    const graph& g, const search_limits& limits = default_limits::orientation);

// Fewest supergraphs of g with CCW <= 1 whose edge sets intersect to E(g).
// g must be connected.
int udim_tiny(const graph& g, const search_limits& limits = default_limits::udim);

}  // namespace ccw
