#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ccw/graph.hpp"

namespace ccw {

using arc = std::pair<vertex, vertex>;

// Directed graph on 0..n-1 held as sorted out- and in-adjacency lists.
// Loops are rejected and duplicates collapse. Antisymmetry and transitivity
// are not enforced here; verify_transitive checks both.
class orientation {
public:
    orientation() = default;
    explicit orientation(std::size_t n) : out_(n), in_(n) {}
    orientation(std::size_t n, std::span<const arc> arcs);
    orientation(std::size_t n, std::initializer_list<arc> arcs)
        : orientation(n, std::span<const arc>(arcs.begin(), arcs.size())) {}

    std::size_t order() const noexcept { return out_.size(); }
    std::size_t arc_count() const noexcept { return arc_count_; }

    const vertex_list& out(vertex v) const { return out_.at(v); }
    const vertex_list& in(vertex v) const { return in_.at(v); }
    bool has_arc(vertex u, vertex v) const;

    // Sorted lexicographically.
    std::vector<arc> arcs() const;

    // Undirected graph obtained by dropping directions.
    graph underlying() const;

    friend bool operator==(const orientation& a, const orientation& b) { return a.out_ == b.out_; }

private:
    std::vector<vertex_list> out_;
    std::vector<vertex_list> in_;
    std::size_t arc_count_ = 0;
};

// True iff the arc set is antisymmetric and closed under composition.
bool verify_transitive(const orientation& o);

// Transitive closure of an acyclic orientation; throws cyclic_orientation.
orientation transitive_closure(const orientation& dag);

}  // namespace ccw
