#include <doctest.h>

#include "ccw/decompose.hpp"
#include "ccw/error.hpp"
#include "ccw/incomparability.hpp"
#include "ccw/io.hpp"
#include "ccw/oracles.hpp"

using namespace ccw;

TEST_CASE("block_cover") {
    const ordered_cover five{{{0}, {1}, {2}, {3}, {4}}};
    CHECK(block_cover(five, 4) == ordered_cover{{{0, 1, 2, 3}, {4}}});
    CHECK(block_cover(five, 1) == five);
    const ordered_cover six{{{0}, {1}, {2}, {3}, {4}, {5}}};
    CHECK(block_cover(six, 2) == ordered_cover{{{0, 1}, {2, 3}, {4, 5}}});
    CHECK(block_cover(five, 9) == ordered_cover{{{0, 1, 2, 3, 4}}});
    CHECK_THROWS_AS(block_cover(five, 0), error);
    CHECK_THROWS_AS(block_cover(ordered_cover{}, 2), error);
}

TEST_CASE("decompose P4 with the singleton cover") {
    const graph p4 = gen::path(4);
    const auto d = decompose(p4, trivial_cover(p4));
    CHECK(d.width == 1);
    REQUIRE(d.factors.size() == 1);
    const auto& t = d.factors[0];
    CHECK(t.kind == factor_kind::terminal);
    CHECK(t.h == p4);
    CHECK(t.complement_orientation.arcs() == std::vector<arc>{{0, 2}, {0, 3}, {1, 3}});
    CHECK(t.block_cover == trivial_cover(p4));
    CHECK(cover_width(t.h, t.block_cover) == 1);
    CHECK(verify_decomposition(p4, d).passed());
}

TEST_CASE("decompose C5 with the singleton cover") {
    const graph c5 = gen::cycle(5);
    const auto d = decompose(c5, trivial_cover(c5));
    CHECK(d.width == 4);
    REQUIRE(d.factors.size() == 4);
    for (int i = 0; i < 3; ++i) CHECK(d.factors[i].kind == factor_kind::co_bipartite);
    CHECK(d.factors[3].kind == factor_kind::terminal);

    // Non-edges of C5: {0,2},{1,3},{2,4} at distance 2; {0,3},{1,4} at 3.
    CHECK(complement(d.factors[0].h).size() == 0);
    CHECK(complement(d.factors[1].h).edges() == std::vector<edge>{{0, 2}, {1, 3}, {2, 4}});
    CHECK(complement(d.factors[2].h).edges() == std::vector<edge>{{0, 3}, {1, 4}});

    // {0,4} is the edge realising W = 4, so no non-edge reaches distance 4.
    CHECK(d.factors[3].h == gen::complete(5));
    CHECK(d.factors[3].block_cover == ordered_cover{{{0, 1, 2, 3}, {4}}});
    CHECK(d.factors[3].complement_orientation.arc_count() == 0);

    // Bipartition for i = 2: parts 0,1 even; 2,3 odd; 4 even.
    CHECK(d.factors[1].side_odd == vertex_list{2, 3});
    CHECK(d.factors[1].side_even == vertex_list{0, 1, 4});

    std::vector<graph> hs;
    for (const auto& f : d.factors) hs.push_back(f.h);
    CHECK(intersect(hs) == c5);

    const auto report = verify_decomposition(c5, d);
    CHECK(report.passed());
}

TEST_CASE("decompose the three-clique chain") {
    const graph g = gen::three_clique_chain();
    const ordered_cover c{{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}}};
    const auto d = decompose(g, c);
    CHECK(d.width == 1);
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].h == g);
    CHECK(verify_decomposition(g, d).passed());
}

TEST_CASE("width-0 cover yields the graph itself as the single factor") {
    const graph g(5, {{0, 1}, {2, 3}, {2, 4}, {3, 4}});
    const ordered_cover c{{{0, 1}, {2, 3, 4}}};
    const auto d = decompose(g, c);
    CHECK(d.width == 0);
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].h == g);
    CHECK(verify_decomposition(g, d).passed());
}

TEST_CASE("decompose rejects invalid covers") {
    try {
        decompose(gen::path(3), {{{0, 2}, {1}}});
        FAIL("expected error");
    } catch (const error& e) {
        CHECK(e.code() == error_code::invalid_cover);
    }
}

TEST_CASE("verify_decomposition catches tampering") {
    const graph c5 = gen::cycle(5);
    const auto d = decompose(c5, trivial_cover(c5));

    auto no_edge = d;
    {
        auto edges = no_edge.factors[0].h.edges();
        edges.erase(std::find(edges.begin(), edges.end(), edge{0, 1}));
        no_edge.factors[0].h = graph(5, edges);
    }
    auto r = verify_decomposition(c5, no_edge);
    CHECK_FALSE(r.intersection.passed);
    CHECK(r.intersection.detail.find("{0,1}") != std::string::npos);
    CHECK_FALSE(r.supergraphs.passed);

    const graph p4 = gen::path(4);
    const auto dp = decompose(p4, trivial_cover(p4));
    auto flipped = dp;
    flipped.factors.back().complement_orientation = orientation(4, {{0, 2}, {3, 0}, {1, 3}});
    r = verify_decomposition(p4, flipped);
    CHECK_FALSE(r.orientation.passed);
    CHECK(r.intersection.passed);

    auto reversed = dp;
    reversed.factors.back().complement_orientation = orientation(4, {{2, 0}, {3, 0}, {3, 1}});
    r = verify_decomposition(p4, reversed);
    CHECK_FALSE(r.orientation.passed);

    auto bad_sides = d;
    std::swap(bad_sides.factors[1].side_odd, bad_sides.factors[1].side_even);
    bad_sides.factors[1].side_odd.push_back(bad_sides.factors[1].side_even.back());
    bad_sides.factors[1].side_even.pop_back();
    r = verify_decomposition(c5, bad_sides);
    CHECK_FALSE(r.bipartitions.passed);

    auto bad_blocks = dp;
    bad_blocks.factors.back().block_cover = ordered_cover{{{0, 1}, {2, 3}}};
    CHECK(verify_decomposition(p4, bad_blocks).block_cover.passed);
    bad_blocks.factors.back().block_cover = ordered_cover{{{0, 1, 2, 3}}};
    r = verify_decomposition(p4, bad_blocks);
    CHECK_FALSE(r.block_cover.passed);

    auto short_list = d;
    short_list.factors.erase(short_list.factors.begin());
    CHECK_FALSE(verify_decomposition(c5, short_list).structure.passed);
}

TEST_CASE("decomposition survives a JSON round trip") {
    const graph c5 = gen::cycle(5);
    const auto d = decompose(c5, trivial_cover(c5));
    const auto text = io::to_json(d).dump();
    const auto back = io::decomposition_from_json(io::parse_json(text));
    CHECK(io::to_json(back).dump() == text);
    CHECK(verify_decomposition(c5, back).passed());
}

TEST_CASE("decomposition invariants on random graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 3 + seed % 10;
        const graph g = gen::random_connected(n, 0.25, seed);
        const auto c = trivial_cover(g);
        const auto d = decompose(g, c);
        const auto r = verify_decomposition(g, d);
        CHECK(r.passed());
        CHECK(d.factors.size() == static_cast<std::size_t>(std::max(d.width, 1)));

        // Factor complements partition the non-edges by part distance.
        std::size_t total = 0;
        for (const auto& f : d.factors) total += complement(f.h).size();
        CHECK(total == complement(g).size());
        for (auto [u, v] : complement(g).edges()) {
            int absent = 0;
            for (const auto& f : d.factors) absent += f.h.adjacent(u, v) ? 0 : 1;
            CHECK(absent == 1);
        }
    }
}

TEST_CASE("decompose at an optimal cover realises CCW factors") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const graph g = gen::random_connected(7, 0.3, seed);
        if (is_clique(g, components(g).front())) continue;
        const auto best = ccw_exact(g);
        const auto d = decompose(g, best.cover);
        CHECK(d.factors.size() == static_cast<std::size_t>(best.width));
        for (const auto& f : d.factors) CHECK(is_unit_incomparability(f.h));
    }
}

TEST_CASE("decompose the greedy cover of a poset graph") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto inst = random_poset_graph(10, 0.3, seed);
        if (!is_connected(inst.g)) continue;
        const auto lc = greedy_layered_cover(inst.ghat);
        CHECK(verify_decomposition(inst.g, decompose(inst.g, lc.cover)).passed());
    }
}
