#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "polydom/errors.hpp"
#include "polydom/model.hpp"
#include "test_support.hpp"

using namespace polydom;

TEST_CASE("chords_intersect basic cases") {
    CHECK(chords_intersect(Chord{1, 3}, Chord{2, 4}));
    CHECK_FALSE(chords_intersect(Chord{1, 2}, Chord{3, 4}));
    CHECK_FALSE(chords_intersect(Chord{2, 6}, Chord{3, 5}));
    CHECK_THROWS_AS(chords_intersect(Chord{1, 3}, Chord{3, 5}), ModelError);
}

TEST_CASE("chords_intersect is symmetric and irreflexive on random models") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        ChordModel m = random_polygon_model(3 + seed % 3, 8, seed);
        for (int a = 0; a < m.chord_count(); ++a) {
            for (int b = a + 1; b < m.chord_count(); ++b) {
                CHECK(chords_intersect(m.chord(a), m.chord(b)) ==
                      chords_intersect(m.chord(b), m.chord(a)));
            }
        }
    }
}

TEST_CASE("build_adjacency on a tiny model") {
    ChordModel m = ChordModel::create({Chord{1, 3}, Chord{2, 4}, Chord{5, 6}});
    UndirectedGraph g = build_adjacency(m);
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(1, 2));
}

TEST_CASE("figure 2 circle model realizes the running example graph") {
    ChordModel m = testsupport::figure2_circle();
    UndirectedGraph g = build_adjacency(m);
    CHECK(g.edge_count() == 12);
    std::multiset<int> degrees;
    for (int v = 0; v < g.size(); ++v) degrees.insert(g.degree(v));
    CHECK(degrees == std::multiset<int>{1, 2, 3, 3, 3, 4, 4, 4});

    // The fixture lists chords a..h in order, so it must match edge for edge.
    UndirectedGraph fig1 = testsupport::figure1_graph();
    REQUIRE(g.size() == fig1.size());
    for (int u = 0; u < g.size(); ++u) {
        for (int v = u + 1; v < g.size(); ++v) {
            CHECK(g.adjacent(u, v) == fig1.adjacent(u, v));
        }
    }
}

TEST_CASE("adjacency edge count equals brute-force interleaving count") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        ChordModel m = random_polygon_model(3 + seed % 3, 3 + seed % 10, seed * 77);
        UndirectedGraph g = build_adjacency(m);
        std::size_t crossing_pairs = 0;
        for (int a = 0; a < m.chord_count(); ++a) {
            for (int b = a + 1; b < m.chord_count(); ++b) {
                const Chord &x = m.chord(a), &y = m.chord(b);
                const bool interleaved =
                    (x.p < y.p && y.p < x.q && x.q < y.q) || (y.p < x.p && x.p < y.q && y.q < x.q);
                if (interleaved) ++crossing_pairs;
            }
        }
        CHECK(g.edge_count() == crossing_pairs);
        for (int v = 0; v < g.size(); ++v) CHECK_FALSE(g.adjacent(v, v));
    }
}

TEST_CASE("pair_restrictions partitions the chords") {
    SUBCASE("single chord on a 3-polygon") {
        ChordModel m = ChordModel::create({Chord{1, 2}}, std::vector<int>{1, 1, 0});
        auto prs = pair_restrictions(m);
        REQUIRE(prs.size() == 1);
        CHECK(prs[0].side_i == 0);
        CHECK(prs[0].side_j == 1);
        CHECK(prs[0].size() == 1);
    }
    SUBCASE("figure 2 polygon model") {
        ChordModel m = testsupport::figure2_polygon();
        auto prs = pair_restrictions(m);
        int total = 0;
        std::multiset<int> sizes;
        for (const auto& pr : prs) {
            total += pr.size();
            sizes.insert(pr.size());
        }
        CHECK(total == 8);
        CHECK(prs.size() == 5);  // the {1,3} side pair holds no chord
        CHECK(sizes == std::multiset<int>{1, 1, 2, 2, 2});
    }
    SUBCASE("random models partition") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            ChordModel m = random_polygon_model(3 + seed % 4, 2 + seed % 12, seed * 13);
            auto prs = pair_restrictions(m);
            std::vector<int> seen;
            for (const auto& pr : prs) {
                CHECK(!pr.chords.empty());
                for (int c : pr.chords) seen.push_back(c);
            }
            std::sort(seen.begin(), seen.end());
            std::vector<int> expect(m.chord_count());
            std::iota(expect.begin(), expect.end(), 0);
            CHECK(seen == expect);
        }
    }
    SUBCASE("circle model rejected") {
        ChordModel m = ChordModel::create({Chord{1, 3}, Chord{2, 4}});
        CHECK_THROWS_AS(pair_restrictions(m), UnsupportedError);
    }
}

TEST_CASE("random_polygon_model is deterministic and valid") {
    ChordModel a = random_polygon_model(4, 10, 1);
    ChordModel b = random_polygon_model(4, 10, 1);
    CHECK(serialize_model(a) == serialize_model(b));
    CHECK(serialize_model(a) != serialize_model(random_polygon_model(4, 10, 2)));

    ChordModel tiny = random_polygon_model(3, 1, 7);
    CHECK(tiny.endpoint_count() == 2);

    ChordModel big = random_polygon_model(3, 50, 2);  // create() validates
    CHECK(big.chord_count() == 50);
    for (const Chord& c : big.chords()) {
        CHECK(big.side_of(c.p) != big.side_of(c.q));
    }
}

TEST_CASE("parse/serialize round trip") {
    SUBCASE("fixtures are canonical") {
        for (const char* name : {"fig_polygon.poly", "fig_circle.circle"}) {
            std::string text = testsupport::read_file(testsupport::fixture_path(name));
            CHECK(serialize_model(parse_model_string(text)) == text);
        }
    }
    SUBCASE("generated models round trip byte-identically") {
        for (std::uint64_t seed = 1; seed <= 15; ++seed) {
            ChordModel m = random_polygon_model(3 + seed % 3, 1 + seed % 9, seed);
            std::string text = serialize_model(m);
            CHECK(serialize_model(parse_model_string(text)) == text);
        }
    }
    SUBCASE("comments and blank lines are ignored") {
        ChordModel m = parse_model_string("# a comment\ncircle v1\n\n2\n1 3\n# another\n2 4\n");
        CHECK(m.chord_count() == 2);
    }
}

TEST_CASE("parse errors carry line numbers") {
    SUBCASE("bad header") {
        CHECK_THROWS_WITH_AS(parse_model_string("nope v9\n1\n1 2\n"),
                             doctest::Contains("line 1"), ParseError);
    }
    SUBCASE("duplicate endpoint") {
        try {
            parse_model_string("circle v1\n2\n1 3\n3 4\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("duplicate endpoint") != std::string::npos);
        }
    }
    SUBCASE("chord within one side") {
        try {
            parse_model_string("poly v1\n3 2\n2 2 0\n1 2\n3 4\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("chord endpoints on same side") != std::string::npos);
        }
    }
    SUBCASE("malformed counts") {
        CHECK_THROWS_AS(parse_model_string("poly v1\n3\n"), ParseError);
        CHECK_THROWS_AS(parse_model_string("circle v1\n2\n1 2\n"), ParseError);
    }
}
