#include "ccw/orientation.hpp"

#include <algorithm>
#include <string>

#include "ccw/error.hpp"

namespace ccw {

orientation::orientation(std::size_t n, std::span<const arc> arcs) : out_(n), in_(n) {
    for (auto [u, v] : arcs) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
            throw error(error_code::index_out_of_range,
                        "arc (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        }
        if (u == v) throw error(error_code::self_loop, "loop at vertex " + std::to_string(u));
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto* lists : {&out_, &in_}) {
        for (auto& l : *lists) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
    }
    for (const auto& l : out_) arc_count_ += l.size();
}

bool orientation::has_arc(vertex u, vertex v) const {
    const auto& l = out_.at(u);
    return std::binary_search(l.begin(), l.end(), v);
}

std::vector<arc> orientation::arcs() const {
    std::vector<arc> result;
    result.reserve(arc_count_);
    for (std::size_t u = 0; u < out_.size(); ++u)
        for (vertex v : out_[u]) result.emplace_back(static_cast<vertex>(u), v);
    return result;
}

graph orientation::underlying() const {
    std::vector<edge> edges(arcs());
    return graph(order(), edges);
}

bool verify_transitive(const orientation& o) {
    const std::size_t n = o.order();
    std::vector<vertex_row> rows(n, vertex_row(n));
    for (std::size_t u = 0; u < n; ++u)
        for (vertex v : o.out(static_cast<vertex>(u))) rows[u].set(v);
    for (std::size_t u = 0; u < n; ++u) {
        for (vertex v : o.out(static_cast<vertex>(u))) {
            if (rows[v].test(u)) return false;
            if (!rows[v].is_subset_of(rows[u])) return false;
        }
    }
    return true;
}

orientation transitive_closure(const orientation& dag) {
    const std::size_t n = dag.order();
    // Kahn order, then reachability rows accumulated in reverse topological order.
    std::vector<std::size_t> indegree(n);
    for (std::size_t v = 0; v < n; ++v) indegree[v] = dag.in(static_cast<vertex>(v)).size();
    vertex_list topo;
    topo.reserve(n);
    for (std::size_t v = 0; v < n; ++v)
        if (indegree[v] == 0) topo.push_back(static_cast<vertex>(v));
    for (std::size_t i = 0; i < topo.size(); ++i)
        for (vertex w : dag.out(topo[i]))
            if (--indegree[w] == 0) topo.push_back(w);
    if (topo.size() != n) throw error(error_code::cyclic_orientation, "orientation has a cycle");

    std::vector<vertex_row> reach(n, vertex_row(n));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        for (vertex w : dag.out(*it)) {
            reach[*it].set(w);
            reach[*it] |= reach[w];
        }
    }
    std::vector<arc> arcs;
    for (std::size_t u = 0; u < n; ++u)
        for (auto v = reach[u].find_first(); v != vertex_row::npos; v = reach[u].find_next(v))
            arcs.emplace_back(static_cast<vertex>(u), static_cast<vertex>(v));
    return orientation(n, arcs);
}

}  // namespace ccw
