#pragma once

#include <string>
#include <vector>

#include "ccw/cover.hpp"
#include "ccw/graph.hpp"
#include "ccw/orientation.hpp"

namespace ccw {

enum class factor_kind { co_bipartite, terminal };

const char* to_string(factor_kind kind) noexcept;

// One factor H_i of a decomposition. Co-bipartite factors carry a
// bipartition of their complement; the terminal factor carries a transitive
// orientation of its complement and a width-1 block cover.
struct factor {
    graph h;
    factor_kind kind = factor_kind::co_bipartite;
    vertex_list side_odd;
    vertex_list side_even;
    orientation complement_orientation;
    ordered_cover block_cover;
};

struct decomposition {
    ordered_cover source_cover;
    int width = 0;  // W(C) of the source cover
    std::vector<factor> factors;
};

// Factors H_1..H_W for an ordered clique cover of width W. The complement of
// H_i (i < W) holds the non-edges whose parts are exactly i apart; the
// terminal factor's complement holds those at distance >= W. A width-0 cover
// yields the single terminal factor g.
decomposition decompose(const graph& g, const ordered_cover& c);

// Groups consecutive runs of w parts; the last run holds the remainder.
ordered_cover block_cover(const ordered_cover& c, int w);

struct check_result {
    bool passed = true;
    std::string detail;
};

struct decomposition_report {
    check_result structure;     // factor count and kinds
    check_result supergraphs;   // (a)
    check_result intersection;  // (b)
    check_result bipartitions;  // (c)
    check_result orientation;   // (d)
    check_result block_cover;   // (e)

    bool passed() const noexcept {
        return structure.passed && supergraphs.passed && intersection.passed &&
               bipartitions.passed && orientation.passed && block_cover.passed;
    }
};

decomposition_report verify_decomposition(const graph& g, const decomposition& d);

}  // namespace ccw
