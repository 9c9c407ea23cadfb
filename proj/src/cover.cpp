#include "ccw/cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>
#include <string>
#include <unordered_set>

#include "ccw/error.hpp"

namespace ccw {

std::string cover_report::summary() const {
    if (valid()) return "valid";
    std::ostringstream os;
    const char* sep = "";
    auto list = [&](const char* label, const vertex_list& vs) {
        if (vs.empty()) return;
        os << sep << label;
        for (vertex v : vs) os << ' ' << v;
        sep = "; ";
    };
    list("out of range:", out_of_range);
    list("uncovered:", uncovered);
    list("doubly covered:", doubly_covered);
    for (auto p : empty_parts) {
        os << sep << "part " << p << " is empty";
        sep = "; ";
    }
    for (const auto& nc : non_cliques) {
        os << sep << "part " << nc.part << " is not a clique (" << nc.u << ", " << nc.v
           << " non-adjacent)";
        sep = "; ";
    }
    return os.str();
}

cover_report validate_cover(const graph& g, const ordered_cover& c) {
    const std::size_t n = g.order();
    cover_report report;
    std::vector<int> hits(n, 0);
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        const auto& part = c.parts[i];
        if (part.empty()) report.empty_parts.push_back(i);
        bool reported = false;
        for (std::size_t a = 0; a < part.size(); ++a) {
            vertex u = part[a];
            if (u < 0 || static_cast<std::size_t>(u) >= n) {
                report.out_of_range.push_back(u);
                continue;
            }
            ++hits[u];
            for (std::size_t b = a + 1; b < part.size() && !reported; ++b) {
                vertex v = part[b];
                if (v < 0 || static_cast<std::size_t>(v) >= n || v == u) continue;
                if (!g.adjacent(u, v)) {
                    report.non_cliques.push_back({i, std::min(u, v), std::max(u, v)});
                    reported = true;
                }
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (hits[v] == 0) report.uncovered.push_back(static_cast<vertex>(v));
        if (hits[v] > 1) report.doubly_covered.push_back(static_cast<vertex>(v));
    }
    return report;
}

void require_valid_cover(const graph& g, const ordered_cover& c) {
    auto report = validate_cover(g, c);
    if (!report.valid()) throw error(error_code::invalid_cover, report.summary());
}

std::vector<int> part_index(const graph& g, const ordered_cover& c) {
    require_valid_cover(g, c);
    std::vector<int> part_of(g.order(), -1);
    for (std::size_t i = 0; i < c.parts.size(); ++i)
        for (vertex v : c.parts[i]) part_of[v] = static_cast<int>(i);
    return part_of;
}

int cover_width(const graph& g, const ordered_cover& c) {
    const auto part_of = part_index(g, c);
    int width = 0;
    for (auto [u, v] : g.edges()) width = std::max(width, std::abs(part_of[u] - part_of[v]));
    return width;
}

graph quotient_graph(const graph& g, const ordered_cover& c) {
    const auto part_of = part_index(g, c);
    std::vector<edge> edges;
    for (auto [u, v] : g.edges()) {
        if (part_of[u] != part_of[v]) edges.emplace_back(part_of[u], part_of[v]);
    }
    return graph(c.parts.size(), edges);
}

int ordering_width(const graph& g, const ordering& order) {
    const std::size_t n = g.order();
    if (order.size() != n) {
        throw error(error_code::not_a_permutation, "ordering length differs from vertex count");
    }
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        vertex v = order[i];
        if (v < 0 || static_cast<std::size_t>(v) >= n || pos[v] != -1) {
            throw error(error_code::not_a_permutation,
                        "ordering is not a permutation (entry " + std::to_string(v) + ")");
        }
        pos[v] = static_cast<int>(i);
    }
    int width = 0;
    for (auto [u, v] : g.edges()) width = std::max(width, std::abs(pos[u] - pos[v]));
    return width;
}

namespace {

// Decides BW(g) <= k by placing vertices left to right. A vertex at position
// q must see all of its neighbours by position q + k, so once the scan
// reaches q + k its last unplaced neighbour is forced.
class bandwidth_search {
public:
    bandwidth_search(const std::vector<std::uint64_t>& adj, int k, search_budget& budget)
        : adj_(adj), n_(static_cast<int>(adj.size())), k_(k), budget_(budget) {}

    bool run(ordering& out) {
        order_.clear();
        if (!place(0)) return false;
        out = order_;
        return true;
    }

private:
    bool place(std::uint64_t placed) {
        const int p = static_cast<int>(order_.size());
        if (p == n_) return true;
        budget_.tick();

        const std::uint64_t unplaced = ~placed & full();
        std::uint64_t forced = 0;
        for (int q = std::max(0, p - k_); q < p; ++q) {
            const std::uint64_t pending = adj_[order_[q]] & unplaced;
            const int slots = q + k_ - p + 1;
            if (std::popcount(pending) > slots) return false;
            if (q == p - k_) forced = pending;
        }
        if (failed_.contains(key(placed))) return false;

        for (int v = 0; v < n_; ++v) {
            const std::uint64_t bit = std::uint64_t{1} << v;
            if (!(unplaced & bit)) continue;
            if (forced && forced != bit) continue;
            order_.push_back(v);
            if (place(placed | bit)) return true;
            order_.pop_back();
        }
        failed_.insert(key(placed));
        return false;
    }

    std::uint64_t full() const { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }

    std::string key(std::uint64_t placed) const {
        std::string s(reinterpret_cast<const char*>(&placed), sizeof placed);
        const int p = static_cast<int>(order_.size());
        for (int q = std::max(0, p - k_); q < p; ++q) s.push_back(static_cast<char>(order_[q]));
        return s;
    }

    const std::vector<std::uint64_t>& adj_;
    int n_;
    int k_;
    search_budget& budget_;
    ordering order_;
    std::unordered_set<std::string> failed_;
};

}  // namespace

bandwidth_result bandwidth_exact(const graph& g, const search_limits& limits) {
    search_budget budget(limits, "bandwidth_exact");
    budget.require_order(g.order());
    const auto adj = adjacency_masks(g);

    ordering identity(g.order());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<vertex>(i);
    if (g.size() == 0) return {0, identity};

    int k = std::max<int>(1, static_cast<int>((g.max_degree() + 1) / 2));
    for (;; ++k) {
        ordering order;
        if (bandwidth_search(adj, k, budget).run(order)) return {k, order};
    }
}

ordered_cover trivial_cover(const graph& g) {
    ordered_cover c;
    c.parts.reserve(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) c.parts.push_back({static_cast<vertex>(v)});
    return c;
}

}  // namespace ccw
