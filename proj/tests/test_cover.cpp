#include <doctest.h>

#include <numeric>

#include "brute_force.hpp"
#include "ccw/cover.hpp"
#include "ccw/error.hpp"
#include "ccw/oracles.hpp"

using namespace ccw;

TEST_CASE("validate_cover") {
    const graph p3 = gen::path(3);
    CHECK(validate_cover(p3, {{{0, 1}, {2}}}).valid());

    auto r = validate_cover(p3, {{{0, 2}, {1}}});
    CHECK_FALSE(r.valid());
    REQUIRE(r.non_cliques.size() == 1);
    CHECK(r.non_cliques[0].part == 0);
    CHECK(r.non_cliques[0].u == 0);
    CHECK(r.non_cliques[0].v == 2);

    r = validate_cover(p3, {{{0, 1}}});
    CHECK(r.uncovered == vertex_list{2});

    r = validate_cover(p3, {{{0, 1}, {1, 2}}});
    CHECK(r.doubly_covered == vertex_list{1});

    r = validate_cover(p3, {{{0, 1}, {}, {2}}});
    CHECK(r.empty_parts == std::vector<std::size_t>{1});

    r = validate_cover(p3, {{{0, 1}, {2, 5}}});
    CHECK(r.out_of_range == vertex_list{5});
}

TEST_CASE("cover_width") {
    const graph chain = gen::three_clique_chain();
    const ordered_cover three{{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}}};
    CHECK(cover_width(chain, three) == 1);
    CHECK(cover_width(gen::complete(4), {{{0, 1, 2, 3}}}) == 0);
    CHECK(cover_width(gen::cycle(5), trivial_cover(gen::cycle(5))) == 4);
    CHECK_THROWS_AS(cover_width(gen::path(3), {{{0, 2}, {1}}}), error);
}

TEST_CASE("quotient_graph") {
    CHECK(quotient_graph(gen::path(4), {{{0, 1}, {2, 3}}}) == gen::complete(2));
    const ordered_cover three{{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}}};
    CHECK(quotient_graph(gen::three_clique_chain(), three) == gen::path(3));
    const graph two_k2(4, {{0, 2}, {1, 3}});
    CHECK(quotient_graph(two_k2, {{{0, 2}, {1, 3}}}) == graph(2));
}

TEST_CASE("cover width equals the identity-order width of the quotient") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const graph g = gen::random_gnp(7, 0.4, seed);
        int checked = 0;
        brute::for_each_ordered_cover(g, [&](const std::vector<std::vector<int>>& parts) {
            if (++checked > 200) return;
            ordered_cover c{parts};
            ordering identity(parts.size());
            std::iota(identity.begin(), identity.end(), 0);
            const int w = cover_width(g, c);
            CHECK(w >= 0);
            CHECK(w == ordering_width(quotient_graph(g, c), identity));
        });
    }
}

TEST_CASE("ordering_width") {
    CHECK(ordering_width(gen::path(3), {0, 1, 2}) == 1);
    CHECK(ordering_width(gen::path(3), {1, 0, 2}) == 2);
    CHECK(ordering_width(gen::complete(4), {2, 0, 3, 1}) == 3);
    CHECK(ordering_width(graph(3), {2, 1, 0}) == 0);
    try {
        ordering_width(gen::path(3), {0, 0, 2});
        FAIL("expected error");
    } catch (const error& e) {
        CHECK(e.code() == error_code::not_a_permutation);
    }
    CHECK_THROWS_AS(ordering_width(gen::path(3), {0, 1}), error);
    CHECK_THROWS_AS(ordering_width(gen::path(3), {0, 1, 3}), error);
}

TEST_CASE("bandwidth_exact") {
    auto p5 = bandwidth_exact(gen::path(5));
    CHECK(p5.width == 1);
    CHECK(p5.order == ordering{0, 1, 2, 3, 4});

    // Frozen from brute::bandwidth over all 5! orderings.
    auto star = bandwidth_exact(gen::star(4));
    CHECK(star.width == 2);
    CHECK(ordering_width(gen::star(4), star.order) == 2);
    CHECK(star.order == ordering{1, 2, 0, 3, 4});

    for (std::size_t n = 1; n <= 7; ++n) CHECK(bandwidth_exact(gen::complete(n)).width == static_cast<int>(n) - 1);
    CHECK(bandwidth_exact(graph(0)).width == 0);
    CHECK(bandwidth_exact(graph(4)).width == 0);

    try {
        bandwidth_exact(gen::path(13));
        FAIL("expected limit");
    } catch (const error& e) {
        CHECK(e.code() == error_code::limit_exceeded);
    }
    search_limits wide{20, 1'000'000, std::chrono::milliseconds{10'000}};
    CHECK(bandwidth_exact(gen::path(20), wide).width == 1);
    search_limits tiny{12, 3, std::chrono::milliseconds{10'000}};
    CHECK_THROWS_AS(bandwidth_exact(gen::grid(3, 3), tiny), error);
}

TEST_CASE("bandwidth_exact matches enumeration of all permutations") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 2 + seed % 7;
        const graph g = gen::random_gnp(n, 0.2 + 0.1 * static_cast<double>(seed % 6), seed);
        const auto bw = bandwidth_exact(g);
        CHECK(bw.width == brute::bandwidth(g));
        CHECK(ordering_width(g, bw.order) == bw.width);
    }
}

TEST_CASE("bandwidth witness is the lexicographically first optimum") {
    for (std::uint64_t seed = 100; seed < 115; ++seed) {
        const graph g = gen::random_connected(6, 0.2, seed);
        const auto bw = bandwidth_exact(g);
        ordering perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (ordering_width(g, perm) == bw.width) break;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(bw.order == perm);
    }
}

TEST_CASE("trivial_cover") {
    CHECK(trivial_cover(gen::path(3)) == ordered_cover{{{0}, {1}, {2}}});
    CHECK(trivial_cover(graph(2)) == ordered_cover{{{0}, {1}}});
    CHECK(cover_width(gen::complete(3), trivial_cover(gen::complete(3))) == 2);
}

TEST_CASE("CCW is at most the bandwidth") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const graph g = gen::random_gnp(2 + seed % 6, 0.45, seed);
        CHECK(brute::ccw(g) <= bandwidth_exact(g).width);
        // Reordering the trivial cover by an optimal ordering realises BW.
        const auto bw = bandwidth_exact(g);
        ordered_cover by_order;
        for (vertex v : bw.order) by_order.parts.push_back({v});
        CHECK(cover_width(g, by_order) == bw.width);
    }
}

TEST_CASE("every ordered cover is at least ceil(s/2) - 1 wide") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const graph g = gen::random_connected(6, 0.3, seed);
        const int s = s_exact(g).s;
        const int bound = (s + 1) / 2 - 1;
        brute::for_each_ordered_cover(g, [&](const std::vector<std::vector<int>>& parts) {
            CHECK(cover_width(g, ordered_cover{parts}) >= bound);
        });
    }
}
