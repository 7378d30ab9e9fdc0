#include <doctest.h>

#include "polydom/errors.hpp"
#include "polydom/oracles.hpp"
#include "polydom/rng.hpp"
#include "test_support.hpp"

using namespace polydom;

namespace {

UndirectedGraph complete_graph(int n) {
    UndirectedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

UndirectedGraph cycle_graph(int n) {
    UndirectedGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

UndirectedGraph random_graph(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    UndirectedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("domination checkers on the running example") {
    UndirectedGraph g = testsupport::figure1_graph();
    CHECK(is_dominating_set(g, std::vector<int>{0, 6}));       // {a,g}
    CHECK_FALSE(is_dominating_set(g, std::vector<int>{2}));    // c covers only {a,c}
    std::vector<int> all(8);
    for (int v = 0; v < 8; ++v) all[v] = v;
    CHECK(is_dominating_set(g, all));

    CHECK(is_paired_dominating_set(g, std::vector<int>{0, 2, 5, 7}));  // {a,c,f,h}
    CHECK_FALSE(is_paired_dominating_set(g, std::vector<int>{0, 6}));  // a-g not an edge
    CHECK_FALSE(is_paired_dominating_set(g, std::vector<int>{}));
}

TEST_CASE("brute-force minima on small graphs") {
    UndirectedGraph fig1 = testsupport::figure1_graph();
    CHECK(min_dominating_set_bruteforce(fig1).size() == 2);
    auto pds = min_paired_dominating_set_bruteforce(fig1);
    REQUIRE(pds.has_value());
    CHECK(pds->size() == 4);
    CHECK(is_paired_dominating_set(fig1, *pds));

    CHECK(min_dominating_set_bruteforce(complete_graph(3)).size() == 1);
    CHECK(min_dominating_set_bruteforce(cycle_graph(6)).size() == 2);
    auto pds6 = min_paired_dominating_set_bruteforce(cycle_graph(6));
    REQUIRE(pds6.has_value());
    CHECK(pds6->size() == 4);

    auto k2 = min_paired_dominating_set_bruteforce(complete_graph(2));
    REQUIRE(k2.has_value());
    CHECK(*k2 == std::vector<int>{0, 1});

    UndirectedGraph isolated(3);
    isolated.add_edge(0, 1);
    CHECK_FALSE(min_paired_dominating_set_bruteforce(isolated).has_value());
}

TEST_CASE("oracle answers are canonical and cap-guarded") {
    UndirectedGraph g = cycle_graph(6);
    auto a = min_dominating_set_bruteforce(g);
    auto b = min_dominating_set_bruteforce(g);
    CHECK(a == b);
    CHECK(a == std::vector<int>{0, 3});  // lexicographically first optimum

    OracleOptions tight;
    tight.cap = 4;
    CHECK_THROWS_AS(min_dominating_set_bruteforce(g, tight), UnsupportedError);
}

TEST_CASE("parallel oracle kernel matches the serial reference") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        UndirectedGraph g = random_graph(9 + static_cast<int>(seed % 4), 0.3, seed * 511);
        OracleOptions serial;
        OracleOptions par;
        par.jobs = 4;
        CHECK(min_dominating_set_bruteforce(g, serial) == min_dominating_set_bruteforce(g, par));
        CHECK(min_paired_dominating_set_bruteforce(g, serial) ==
              min_paired_dominating_set_bruteforce(g, par));
    }
}

TEST_CASE("domination size relations over random graphs") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        UndirectedGraph g = random_graph(3 + static_cast<int>(seed % 10), 0.35, seed * 97);
        auto ds = min_dominating_set_bruteforce(g);
        auto pds = min_paired_dominating_set_bruteforce(g);
        if (pds) {
            CHECK(ds.size() <= pds->size());
            CHECK(pds->size() % 2 == 0);
            CHECK(is_paired_dominating_set(g, *pds));
        }
    }
}

TEST_CASE("hamiltonian path search") {
    SUBCASE("simple path") {
        Digraph d(3, {{0, 1}, {1, 2}});
        auto p = hamiltonian_path(d);
        REQUIRE(p.has_value());
        CHECK(*p == std::vector<int>{0, 1, 2});
        CHECK(is_hamiltonian_path(d, *p));
    }
    SUBCASE("the running instance has none") {
        Digraph d(3, {{0, 2}, {1, 2}});
        CHECK_FALSE(hamiltonian_path(d).has_value());
    }
    SUBCASE("complete digraph") {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 3; ++u)
            for (int v = 0; v < 3; ++v)
                if (u != v) edges.emplace_back(u, v);
        Digraph d(3, edges);
        auto p = hamiltonian_path(d);
        REQUIRE(p.has_value());
        CHECK(is_hamiltonian_path(d, *p));
    }
    SUBCASE("path must end at the last vertex") {
        Digraph d(3, {{0, 2}, {2, 1}});
        CHECK_FALSE(hamiltonian_path(d).has_value());
    }
    SUBCASE("cap is enforced") {
        OracleOptions tight;
        tight.ham_cap = 2;
        Digraph d(3, {{0, 1}, {1, 2}});
        CHECK_THROWS_AS(hamiltonian_path(d, tight), UnsupportedError);
    }
}

TEST_CASE("digraph file format round trip") {
    Digraph d(4, {{0, 1}, {1, 3}, {2, 0}});
    std::string text = serialize_digraph(d);
    Digraph back = parse_digraph_string(text);
    CHECK(serialize_digraph(back) == text);
    CHECK(back.size() == 4);
    CHECK(back.edge_count() == 3);
    CHECK_THROWS_AS(parse_digraph_string("digraph v1\n2 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph_string("graph v1\n2 0\n"), ParseError);
}
