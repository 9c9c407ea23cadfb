#include "ccw/incomparability.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "ccw/error.hpp"
#include "ccw/random.hpp"

namespace ccw {

layered_cover greedy_layered_cover(const orientation& ghat, bool verify) {
    const std::size_t n = ghat.order();
    std::vector<int> indegree(n);
    for (std::size_t v = 0; v < n; ++v) indegree[v] = static_cast<int>(ghat.in(static_cast<vertex>(v)).size());

    layered_cover lc;
    lc.levels.assign(n, 0);
    int* level = lc.levels.data();
    vertex_list queue;
    queue.reserve(n);
    for (std::size_t v = 0; v < n; ++v)
        if (indegree[v] == 0) queue.push_back(static_cast<vertex>(v));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const vertex u = queue[head];
        const int next = level[u] + 1;
        for (vertex w : ghat.out(u)) {
            if (level[w] < next) level[w] = next;
            if (--indegree[w] == 0) queue.push_back(w);
        }
    }
    if (queue.size() != n) throw error(error_code::cyclic_orientation, "orientation has a cycle");
    if (verify && !verify_transitive(ghat)) {
        throw error(error_code::not_transitive, "orientation is not transitive");
    }

    const int depth = n ? *std::max_element(lc.levels.begin(), lc.levels.end()) + 1 : 0;
    lc.cover.parts.resize(static_cast<std::size_t>(depth));
    for (std::size_t v = 0; v < n; ++v) lc.cover.parts[lc.levels[v]].push_back(static_cast<vertex>(v));
    return lc;
}

star_certificate extract_star_certificate(const graph& g, const orientation& ghat,
                                          const layered_cover& lc) {
    const int width = cover_width(g, lc.cover);
    if (width == 0) return {-1, {}, true};

    const auto& level = lc.levels;
    std::tuple<int, int, vertex, vertex> best{-1, -1, -1, -1};
    for (auto [u, v] : g.edges()) {
        auto [a, b] = level[u] <= level[v] ? edge{u, v} : edge{v, u};
        if (level[b] - level[a] != width) continue;
        std::tuple<int, int, vertex, vertex> cand{level[a], level[b], a, b};
        if (std::get<0>(best) < 0 || cand < best) best = cand;
    }
    auto [i, j, a, b] = best;

    vertex_list leaves{b};
    vertex x = b;
    for (int t = j - 1; t >= i; --t) {
        const auto& preds = ghat.in(x);
        auto it = std::find_if(preds.begin(), preds.end(), [&](vertex p) { return level[p] == t; });
        if (it == preds.end()) {
            throw error(error_code::invalid_argument,
                        "vertex " + std::to_string(x) + " has no in-neighbour in layer " + std::to_string(t));
        }
        x = *it;
        leaves.push_back(x);
    }
    std::sort(leaves.begin(), leaves.end());
    star_certificate cert{a, std::move(leaves), false};
    if (auto problem = check_star(g, cert); !problem.empty()) {
        throw error(error_code::invalid_argument, "extracted star is invalid: " + problem);
    }
    return cert;
}

approx_result ccw_two_approx(const graph& g, const std::optional<orientation>& ghat,
                             const search_limits& limits, bool verify) {
    const graph co = complement(g);
    orientation o;
    if (ghat) {
        if (ghat->order() != g.order() || !(ghat->underlying() == co)) {
            throw error(error_code::not_incomparability,
                        "orientation does not cover exactly the complement's edges");
        }
        o = *ghat;
    } else {
        auto found = find_transitive_orientation(co, limits);
        if (!found) {
            throw error(error_code::not_incomparability,
                        "complement has no transitive orientation");
        }
        o = std::move(*found);
        verify = false;
    }
    auto lc = greedy_layered_cover(o, verify);
    approx_result r;
    r.upper = cover_width(g, lc.cover);
    r.lower = (r.upper + 2) / 2 - 1;
    r.witness_star = extract_star_certificate(g, o, lc);
    r.witness_cover = std::move(lc.cover);
    return r;
}

poset_instance random_poset_graph(std::size_t n, double density, std::uint64_t seed) {
    seeded_rng rng(seed);
    vertex_list order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::vector<arc> arcs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.bernoulli(density)) arcs.emplace_back(order[i], order[j]);
    auto ghat = transitive_closure(orientation(n, arcs));
    auto g = complement(ghat.underlying());
    return {std::move(g), std::move(ghat)};
}

}  // namespace ccw
