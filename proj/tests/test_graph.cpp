#include <doctest.h>

#include "ccw/error.hpp"
#include "ccw/graph.hpp"
#include "ccw/io.hpp"

using namespace ccw;

namespace {

error_code code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return error_code::invalid_argument;
}

}  // namespace

TEST_CASE("build_graph") {
    graph p3(3, {{0, 1}, {1, 2}});
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3 == gen::path(3));

    graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(k4 == gen::complete(4));

    graph dup(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.size() == 1);

    CHECK(code_of([] { graph(2, {{0, 0}}); }) == error_code::self_loop);
    CHECK(code_of([] { graph(2, {{0, 2}}); }) == error_code::index_out_of_range);
    CHECK(code_of([] { graph(2, {{-1, 1}}); }) == error_code::index_out_of_range);
}

TEST_CASE("complement") {
    CHECK(complement(gen::complete(4)) == graph(4));
    CHECK(complement(gen::cycle(4)) == graph(4, {{0, 2}, {1, 3}}));
    CHECK(complement(gen::path(3)) == graph(3, {{0, 2}}));
    CHECK(complement(graph(0)) == graph(0));
}

TEST_CASE("complement is an involution on random graphs") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto n = static_cast<std::size_t>(seed % 65);
        const graph g = gen::random_gnp(n, 0.3, seed);
        const graph co = complement(g);
        CHECK(complement(co) == g);
        CHECK(g.size() + co.size() == n * (n > 0 ? n - 1 : 0) / 2);
    }
}

TEST_CASE("induced_subgraph") {
    const vertex_list s{0, 1, 2};
    CHECK(induced_subgraph(gen::complete(4), s).subgraph == gen::complete(3));
    auto r = induced_subgraph(gen::cycle(5), s);
    CHECK(r.subgraph == gen::path(3));
    CHECK(r.mapping == s);
    CHECK(induced_subgraph(gen::cycle(5), {}).subgraph == graph(0));

    const vertex_list shuffled{4, 0, 2};
    auto q = induced_subgraph(gen::cycle(5), shuffled);
    CHECK(q.mapping == vertex_list{0, 2, 4});
    CHECK(q.subgraph == graph(3, {{0, 2}}));
    const vertex_list bad{7};
    CHECK_THROWS_AS(induced_subgraph(gen::cycle(5), bad), error);
}

TEST_CASE("components") {
    CHECK(components(graph(4, {{0, 2}, {1, 3}})) == std::vector<vertex_list>{{0, 2}, {1, 3}});
    CHECK(components(gen::complete(4)) == std::vector<vertex_list>{{0, 1, 2, 3}});
    CHECK(components(graph(3)) == std::vector<vertex_list>{{0}, {1}, {2}});
    CHECK(components(graph(0)).empty());
}

TEST_CASE("components partition V into connected, mutually non-adjacent pieces") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const graph g = gen::random_gnp(30, 0.05, seed);
        const auto comps = components(g);
        std::vector<int> owner(g.order(), -1);
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (i > 0) CHECK(comps[i - 1].front() < comps[i].front());
            CHECK(std::is_sorted(comps[i].begin(), comps[i].end()));
            for (vertex v : comps[i]) {
                CHECK(owner[v] == -1);
                owner[v] = static_cast<int>(i);
            }
            CHECK(is_connected(induced_subgraph(g, comps[i]).subgraph));
        }
        CHECK(std::count(owner.begin(), owner.end(), -1) == 0);
        for (auto [u, v] : g.edges()) CHECK(owner[u] == owner[v]);
    }
}

TEST_CASE("generators") {
    CHECK(gen::star(5).degree(0) == 5);
    CHECK(gen::grid(4, 4).size() == 24);
    const graph chain = gen::three_clique_chain();
    CHECK(chain.order() == 12);
    CHECK(chain.size() == 3 * 6 + 2);
    CHECK(is_connected(gen::random_connected(12, 0.1, 3)));
    CHECK(gen::random_gnp(20, 0.5, 9) == gen::random_gnp(20, 0.5, 9));
}

TEST_CASE("parse_graph edge list") {
    CHECK(io::parse_graph("p 3 2\ne 0 1\ne 1 2", io::graph_format::edge_list) == gen::path(3));
    CHECK(io::parse_graph("# comment\np 3 2   # header\n\ne 0 1\ne 1 2\n", io::graph_format::edge_list) ==
          gen::path(3));
    CHECK(io::parse_graph("p 2 2\ne 0 1\ne 1 0\n", io::graph_format::edge_list).size() == 1);

    CHECK_THROWS_AS(io::parse_graph("p 3 1\ne 0 9\n", io::graph_format::edge_list), error);
    try {
        io::parse_graph("p 3 1\ne 0 9\n", io::graph_format::edge_list);
    } catch (const error& e) {
        CHECK(e.code() == error_code::index_out_of_range);
    }
    try {
        io::parse_graph("p 3 1\ne 0 x\n", io::graph_format::edge_list);
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(io::parse_graph("e 0 1\n", io::graph_format::edge_list), parse_error);
    CHECK_THROWS_AS(io::parse_graph("p 3 2\ne 0 1\n", io::graph_format::edge_list), parse_error);
    CHECK_THROWS_AS(io::parse_graph("q 3 2\n", io::graph_format::edge_list), parse_error);
    CHECK_THROWS_AS(io::parse_graph("p 3 1\ne 1 1\n", io::graph_format::edge_list), error);
}

TEST_CASE("parse_graph json") {
    const graph g = io::parse_graph(R"({"n":4,"edges":[[0,1]]})", io::graph_format::json);
    CHECK(g.order() == 4);
    CHECK(g.edges() == std::vector<edge>{{0, 1}});
    try {
        io::parse_graph("{\"n\":4,\n \"edges\": [[0,1]", io::graph_format::json);
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(io::parse_graph(R"({"n":4})", io::graph_format::json), parse_error);
    CHECK_THROWS_AS(io::parse_graph(R"({"n":4,"edges":[[0,1,2]]})", io::graph_format::json), parse_error);
}

TEST_CASE("serialize_graph") {
    CHECK(io::serialize_graph(gen::path(3), io::graph_format::edge_list) == "p 3 2\ne 0 1\ne 1 2\n");
    CHECK(io::serialize_graph(graph(0), io::graph_format::edge_list) == "p 0 0\n");
    CHECK(io::serialize_graph(graph(3, {{2, 1}, {1, 0}}), io::graph_format::edge_list) ==
          "p 3 2\ne 0 1\ne 1 2\n");

    const auto dot = io::serialize_graph(gen::complete(3), io::graph_format::dot);
    CHECK(dot.rfind("graph G {", 0) == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("0 -- 2;") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 8);
}

TEST_CASE("parse and serialize round-trip on random graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const graph g = gen::random_gnp(seed % 65, 0.2, seed);
        for (auto fmt : {io::graph_format::edge_list, io::graph_format::json}) {
            CHECK(io::parse_graph(io::serialize_graph(g, fmt), fmt) == g);
        }
    }
}
