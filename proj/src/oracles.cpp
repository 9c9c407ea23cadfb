#include "ccw/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <sstream>
#include <unordered_set>

#include "ccw/error.hpp"

namespace ccw {

namespace {

using mask = std::uint64_t;

constexpr mask bit(int v) { return mask{1} << v; }

mask full_mask(std::size_t n) { return n == 64 ? ~mask{0} : bit(static_cast<int>(n)) - 1; }

mask neighborhood(const std::vector<mask>& adj, mask set) {
    mask out = 0;
    for (mask q = set; q; q &= q - 1) out |= adj[std::countr_zero(q)];
    return out;
}

mask common_neighbors(const std::vector<mask>& adj, mask set, mask universe) {
    mask out = universe;
    for (mask q = set; q; q &= q - 1) out &= adj[std::countr_zero(q)];
    return out;
}

bool is_clique_mask(const std::vector<mask>& adj, mask set) {
    for (mask q = set; q; q &= q - 1) {
        int v = std::countr_zero(q);
        if ((set & ~bit(v) & ~adj[v]) != 0) return false;
    }
    return true;
}

// Size of a greedily built independent set inside `set`: a lower bound on
// its independence number.
int greedy_independent(const std::vector<mask>& adj, mask set) {
    int size = 0;
    while (set) {
        int v = std::countr_zero(set);
        set &= ~bit(v) & ~adj[v];
        ++size;
    }
    return size;
}

std::string key_of(std::span<const mask> words) {
    return std::string(reinterpret_cast<const char*>(words.data()), words.size_bytes());
}

// Maximum clique with greedy-colouring bounds. Only strictly larger cliques
// replace the incumbent, so the first optimum found is kept.
class max_clique {
public:
    max_clique(const std::vector<mask>& adj, search_budget& budget, int floor)
        : adj_(adj), budget_(budget), best_size_(floor) {}

    void run(mask candidates) { expand(0, 0, candidates); }
    int best_size() const { return best_size_; }
    mask best() const { return best_; }

private:
    void expand(mask current, int size, mask cand) {
        budget_.tick();
        if (!cand) {
            if (size > best_size_) {
                best_size_ = size;
                best_ = current;
            }
            return;
        }
        std::vector<std::pair<int, int>> order;
        mask uncolored = cand;
        int color = 0;
        while (uncolored) {
            ++color;
            mask q = uncolored;
            while (q) {
                int v = std::countr_zero(q);
                q &= ~bit(v) & ~adj_[v];
                uncolored &= ~bit(v);
                order.emplace_back(v, color);
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto [v, c] = *it;
            if (size + c <= best_size_) return;
            expand(current | bit(v), size + 1, cand & adj_[v]);
            cand &= ~bit(v);
        }
    }

    const std::vector<mask>& adj_;
    search_budget& budget_;
    int best_size_;
    mask best_ = 0;
};

// Decides whether a connected graph has an ordered clique cover of width
// <= k (k >= 1). Parts are laid down left to right; every vertex of part
// j - k must see all of its neighbours by part j, which forces them into it.
class cover_search {
public:
    cover_search(const std::vector<mask>& adj, int k, search_budget& budget)
        : adj_(adj), k_(k), budget_(budget) {}

    std::optional<std::vector<mask>> run() {
        parts_.clear();
        reach_.clear();
        if (dfs(full_mask(adj_.size()))) return parts_;
        return std::nullopt;
    }

private:
    bool dfs(mask remaining) {
        if (!remaining) return true;
        budget_.tick();

        const int j = static_cast<int>(parts_.size());
        const mask forced = j >= k_ ? reach_[j - k_] & remaining : 0;
        for (int p = std::max(0, j - k_ + 1); p < j; ++p) {
            const int slots = p + k_ - j + 1;
            if (greedy_independent(adj_, reach_[p] & remaining) > slots) return false;
        }
        if (!is_clique_mask(adj_, forced)) return false;

        std::vector<mask> key{remaining};
        for (int p = std::max(0, j - k_); p < j; ++p) key.push_back(parts_[p]);
        const auto k = key_of(key);
        if (failed_.contains(k)) return false;

        const mask pool = common_neighbors(adj_, forced, remaining & ~forced);
        if (extend(remaining, forced, 0, pool)) return true;
        failed_.insert(k);
        return false;
    }

    // Enumerates cliques forced | chosen | (subset of pool), largest-first.
    bool extend(mask remaining, mask forced, mask chosen, mask pool) {
        if (!pool) {
            const mask part = forced | chosen;
            if (!part) return false;
            parts_.push_back(part);
            reach_.push_back(neighborhood(adj_, part));
            if (dfs(remaining & ~part)) return true;
            parts_.pop_back();
            reach_.pop_back();
            return false;
        }
        const int v = std::countr_zero(pool);
        const mask rest = pool & ~bit(v);
        if (extend(remaining, forced, chosen | bit(v), rest & adj_[v])) return true;
        return extend(remaining, forced, chosen, rest);
    }

    const std::vector<mask>& adj_;
    int k_;
    search_budget& budget_;
    std::vector<mask> parts_;
    std::vector<mask> reach_;
    std::unordered_set<std::string> failed_;
};

vertex_list to_vertices(mask m, const vertex_list& mapping) {
    vertex_list out;
    for (; m; m &= m - 1) out.push_back(mapping[std::countr_zero(m)]);
    std::sort(out.begin(), out.end());
    return out;
}

// Cover of width <= k for one connected component, in original labels.
std::optional<ordered_cover> component_cover(const graph& g, const vertex_list& comp, int k,
                                             search_budget& budget) {
    auto sub = induced_subgraph(g, comp);
    if (is_clique(g, comp)) return ordered_cover{{comp}};
    if (k < 1) return std::nullopt;
    const auto adj = adjacency_masks(sub.subgraph);
    auto parts = cover_search(adj, k, budget).run();
    if (!parts) return std::nullopt;
    ordered_cover c;
    for (mask p : *parts) c.parts.push_back(to_vertices(p, sub.mapping));
    return c;
}

}  // namespace

std::string check_star(const graph& g, const star_certificate& cert) {
    if (cert.degenerate) {
        if (cert.center != -1 || !cert.leaves.empty()) return "degenerate certificate carries vertices";
        return {};
    }
    const auto n = static_cast<vertex>(g.order());
    if (cert.center < 0 || cert.center >= n) return "centre out of range";
    std::ostringstream os;
    for (std::size_t i = 0; i < cert.leaves.size(); ++i) {
        vertex a = cert.leaves[i];
        if (a < 0 || a >= n) return "leaf out of range";
        if (a == cert.center) return "centre listed as a leaf";
        if (!g.adjacent(cert.center, a)) {
            os << "leaf " << a << " not adjacent to centre " << cert.center;
            return os.str();
        }
        for (std::size_t j = i + 1; j < cert.leaves.size(); ++j) {
            vertex b = cert.leaves[j];
            if (a == b) return "repeated leaf";
            if (b >= 0 && b < n && g.adjacent(a, b)) {
                os << "leaves " << a << " and " << b << " are adjacent";
                return os.str();
            }
        }
    }
    return {};
}

star_result s_exact(const graph& g, const search_limits& limits) {
    search_budget budget(limits, "s_exact");
    const std::size_t n = g.order();
    if (n <= 2) {
        if (g.size() == 1) return {1, {0, {1}, false}};
        return {1, {-1, {}, true}};
    }
    budget.require_order(g.max_degree());

    int best = 0;
    star_certificate cert{-1, {}, true};
    for (std::size_t v = 0; v < n; ++v) {
        const auto center = static_cast<vertex>(v);
        if (g.degree(center) <= static_cast<std::size_t>(best)) continue;
        const auto nbrs = g.neighbor_list(center);
        // Independent sets of N(v) are cliques of its complement.
        std::vector<mask> co(nbrs.size(), 0);
        for (std::size_t a = 0; a < nbrs.size(); ++a)
            for (std::size_t b = 0; b < nbrs.size(); ++b)
                if (a != b && !g.adjacent(nbrs[a], nbrs[b])) co[a] |= bit(static_cast<int>(b));
        max_clique search(co, budget, best);
        search.run(full_mask(nbrs.size()));
        if (search.best_size() > best) {
            best = search.best_size();
            cert = {center, to_vertices(search.best(), nbrs), false};
        }
    }
    if (best == 0) return {1, {-1, {}, true}};
    return {best, cert};
}

std::optional<ordered_cover> cover_within(const graph& g, int k, const search_limits& limits) {
    search_budget budget(limits, "cover_within");
    budget.require_order(g.order());
    ordered_cover out;
    for (const auto& comp : components(g)) {
        auto c = component_cover(g, comp, k, budget);
        if (!c) return std::nullopt;
        out.parts.insert(out.parts.end(), c->parts.begin(), c->parts.end());
    }
    return out;
}

ccw_result ccw_exact(const graph& g, const search_limits& limits) {
    search_budget budget(limits, "ccw_exact");
    budget.require_order(g.order());
    ccw_result result{0, {}};
    for (const auto& comp : components(g)) {
        int lower = 0;
        if (!is_clique(g, comp)) {
            const int s = s_exact(induced_subgraph(g, comp).subgraph).s;
            lower = std::max(1, (s + 1) / 2 - 1);
        }
        for (int k = lower;; ++k) {
            if (auto c = component_cover(g, comp, k, budget)) {
                result.width = std::max(result.width, k);
                result.cover.parts.insert(result.cover.parts.end(), c->parts.begin(),
                                          c->parts.end());
                break;
            }
        }
    }
    return result;
}

bool is_unit_incomparability(const graph& g, const search_limits& limits) {
    return cover_within(g, 1, limits).has_value();
}

namespace {

// Backtracking transitive orientation with forcing. dir[u*n+v] is +1 when
// u->v is fixed, -1 when v->u is fixed, 0 when open.
class orientation_search {
public:
    orientation_search(const graph& g, search_budget& budget)
        : g_(g), n_(static_cast<int>(g.order())), edges_(g.edges()), budget_(budget) {}

    std::optional<std::vector<signed char>> run() {
        std::vector<signed char> dir(static_cast<std::size_t>(n_) * n_, 0);
        if (solve(dir, 0)) return dir;
        return std::nullopt;
    }

private:
    bool solve(std::vector<signed char>& dir, std::size_t next) {
        budget_.tick();
        while (next < edges_.size() && at(dir, edges_[next].first, edges_[next].second) != 0) ++next;
        if (next == edges_.size()) return true;
        auto [u, v] = edges_[next];
        for (auto [a, b] : {arc{u, v}, arc{v, u}}) {
            auto trial = dir;
            if (assign(trial, a, b) && solve(trial, next + 1)) {
                dir = std::move(trial);
                return true;
            }
        }
        return false;
    }

    signed char at(const std::vector<signed char>& dir, int u, int v) const {
        return dir[static_cast<std::size_t>(u) * n_ + v];
    }

    bool set(std::vector<signed char>& dir, std::vector<arc>& queue, int a, int b) const {
        if (!g_.adjacent(a, b)) return false;
        const auto state = at(dir, a, b);
        if (state == 1) return true;
        if (state == -1) return false;
        dir[static_cast<std::size_t>(a) * n_ + b] = 1;
        dir[static_cast<std::size_t>(b) * n_ + a] = -1;
        queue.emplace_back(a, b);
        return true;
    }

    bool assign(std::vector<signed char>& dir, int a0, int b0) const {
        std::vector<arc> queue;
        if (!set(dir, queue, a0, b0)) return false;
        while (!queue.empty()) {
            auto [a, b] = queue.back();
            queue.pop_back();
            for (int c = 0; c < n_; ++c) {
                if (c == a || c == b) continue;
                const bool ac = g_.adjacent(a, c);
                const bool bc = g_.adjacent(b, c);
                // c->a->b would need cb; a->b->c would need ac.
                if (ac && !bc && !set(dir, queue, a, c)) return false;
                if (bc && !ac && !set(dir, queue, c, b)) return false;
                if (at(dir, b, c) == 1 && !set(dir, queue, a, c)) return false;
                if (at(dir, c, a) == 1 && !set(dir, queue, c, b)) return false;
            }
        }
        return true;
    }

    const graph& g_;
    int n_;
    std::vector<edge> edges_;
    search_budget& budget_;
};

}  // namespace

std::optional<orientation> find_transitive_orientation(const graph& g, const search_limits& limits) {
    search_budget budget(limits, "find_transitive_orientation");
    budget.require_order(g.order());
    auto dir = orientation_search(g, budget).run();
    if (!dir) return std::nullopt;
    const std::size_t n = g.order();
    std::vector<arc> arcs;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if ((*dir)[u * n + v] == 1) arcs.emplace_back(static_cast<vertex>(u), static_cast<vertex>(v));
    orientation o(n, arcs);
    if (!verify_transitive(o)) {
        throw error(error_code::not_transitive, "orientation search produced a non-transitive result");
    }
    return o;
}

namespace {

// Non-edge sets separated by width-1 ordered partitions of V. A partition
// (P_0, ..., P_t) whose graph edges only join equal or consecutive parts
// yields the unit supergraph g + (pairs inside parts); its complement is the
// set of non-edges crossing parts.
class unit_supergraph_enumerator {
public:
    unit_supergraph_enumerator(const std::vector<mask>& adj, const std::vector<edge>& non_edges,
                               search_budget& budget)
        : adj_(adj), non_edges_(non_edges), budget_(budget), part_of_(adj.size(), -1) {}

    std::vector<mask> maximal_sets() {
        found_.clear();
        dfs(full_mask(adj_.size()), 0, 0);
        std::vector<mask> sets(found_.begin(), found_.end());
        std::stable_sort(sets.begin(), sets.end(),
                         [](mask a, mask b) { return std::popcount(a) > std::popcount(b); });
        std::vector<mask> maximal;
        for (mask s : sets) {
            bool dominated = std::any_of(maximal.begin(), maximal.end(),
                                         [s](mask m) { return (s & ~m) == 0; });
            if (!dominated) maximal.push_back(s);
        }
        return maximal;
    }

private:
    void dfs(mask remaining, mask last, int index) {
        budget_.tick();
        if (!remaining) {
            mask separated = 0;
            for (std::size_t i = 0; i < non_edges_.size(); ++i) {
                auto [u, v] = non_edges_[i];
                if (part_of_[u] != part_of_[v]) separated |= bit(static_cast<int>(i));
            }
            found_.insert(separated);
            return;
        }
        const mask forced = neighborhood(adj_, last) & remaining;
        const mask free = remaining & ~forced;
        // Every subset of `free`, joined with the forced vertices.
        for (mask sub = free;; sub = (sub - 1) & free) {
            const mask part = forced | sub;
            if (part) {
                for (mask q = part; q; q &= q - 1) part_of_[std::countr_zero(q)] = index;
                dfs(remaining & ~part, part, index + 1);
            }
            if (sub == 0) break;
        }
    }

    const std::vector<mask>& adj_;
    const std::vector<edge>& non_edges_;
    search_budget& budget_;
    std::vector<int> part_of_;
    std::set<mask> found_;
};

bool set_cover(const std::vector<mask>& sets, mask uncovered, int depth, search_budget& budget) {
    if (!uncovered) return true;
    if (depth == 0) return false;
    budget.tick();
    const mask target = bit(std::countr_zero(uncovered));
    for (mask s : sets) {
        if ((s & target) && set_cover(sets, uncovered & ~s, depth - 1, budget)) return true;
    }
    return false;
}

}  // namespace

int udim_tiny(const graph& g, const search_limits& limits) {
    search_budget budget(limits, "udim_tiny");
    budget.require_order(g.order());
    if (!is_connected(g)) throw error(error_code::invalid_argument, "udim_tiny requires a connected graph");

    const auto non_edges = complement(g).edges();
    if (non_edges.empty()) return 1;
    if (non_edges.size() > 64) {
        throw error(error_code::limit_exceeded, "udim_tiny: more than 64 non-edges");
    }
    const auto adj = adjacency_masks(g);
    const auto sets = unit_supergraph_enumerator(adj, non_edges, budget).maximal_sets();
    const mask all = full_mask(non_edges.size());
    for (int d = 1; d <= static_cast<int>(non_edges.size()); ++d) {
        if (set_cover(sets, all, d, budget)) return d;
    }
    throw error(error_code::invalid_argument, "non-edges cannot be separated by unit supergraphs");
}

}  // namespace ccw
