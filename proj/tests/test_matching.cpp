#include <doctest.h>

#include <algorithm>

#include "polydom/matching.hpp"
#include "polydom/model.hpp"
#include "polydom/rng.hpp"
#include "test_support.hpp"

using namespace polydom;

namespace {

UndirectedGraph path_graph(int n) {
    UndirectedGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

UndirectedGraph cycle_graph(int n) {
    UndirectedGraph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

UndirectedGraph random_graph(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    UndirectedGraph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.chance(p)) g.add_edge(u, v);
        }
    }
    return g;
}

bool matching_is_valid(const UndirectedGraph& g, const Matching& m) {
    Bitset used(g.size());
    for (auto [u, v] : m.pairs) {
        if (!g.adjacent(u, v)) return false;
        if (used.test(u) || used.test(v)) return false;
        used.set(u);
        used.set(v);
    }
    return true;
}

}  // namespace

TEST_CASE("max_matching small cases") {
    CHECK(max_matching(path_graph(4)).size() == 2);
    CHECK(max_matching(cycle_graph(5)).size() == 2);
    CHECK(max_matching(testsupport::figure1_graph()).size() == 4);
}

TEST_CASE("max_matching equals exhaustive search on random graphs") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        int n = 2 + static_cast<int>(seed % 11);
        double p = 0.15 + 0.1 * static_cast<double>(seed % 8);
        UndirectedGraph g = random_graph(n, p, seed * 1009);
        Matching m = max_matching(g);
        CHECK(matching_is_valid(g, m));
        CHECK(m.size() == testsupport::exhaustive_max_matching(g));
    }
}

TEST_CASE("max_matching handles odd components and blossoms") {
    // Two triangles joined by a bridge: matching must cross the blossoms.
    UndirectedGraph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 3);
    CHECK(max_matching(g).size() == 3);
}

TEST_CASE("has_perfect_matching") {
    UndirectedGraph fig1 = testsupport::figure1_graph();
    CHECK(has_perfect_matching(fig1, std::vector<int>{}));
    CHECK(has_perfect_matching(fig1, std::vector<int>{0, 2, 5, 7}));  // {a,c,f,h}
    CHECK_FALSE(has_perfect_matching(fig1, std::vector<int>{0, 1, 2}));
    CHECK_FALSE(has_perfect_matching(fig1, std::vector<int>{0, 6}));  // a-g not adjacent
}

TEST_CASE("min_augmentation examples") {
    SUBCASE("two crossing chords need nothing") {
        ChordModel m = ChordModel::create({Chord{1, 3}, Chord{2, 4}});
        auto psi = min_augmentation(m, {0, 1});
        REQUIRE(psi.has_value());
        CHECK(psi->empty());
    }
    SUBCASE("single chord picks its crossing partner") {
        ChordModel m = ChordModel::create({Chord{1, 3}, Chord{2, 4}});
        auto psi = min_augmentation(m, {0});
        REQUIRE(psi.has_value());
        CHECK(*psi == std::vector<int>{1});
    }
    SUBCASE("isolated chord is infeasible") {
        ChordModel m = ChordModel::create({Chord{1, 2}, Chord{3, 5}, Chord{4, 6}});
        CHECK_FALSE(min_augmentation(m, {0}).has_value());
    }
    SUBCASE("path of three chords augments with one") {
        // Chords 0-1-2 form a path; chord 3 crosses chord 2 only.
        ChordModel m =
            ChordModel::create({Chord{1, 3}, Chord{2, 5}, Chord{4, 7}, Chord{6, 8}});
        UndirectedGraph g = build_adjacency(m);
        REQUIRE(g.adjacent(0, 1));
        REQUIRE(g.adjacent(1, 2));
        REQUIRE(g.adjacent(2, 3));
        REQUIRE_FALSE(g.adjacent(0, 2));
        auto psi = min_augmentation(m, {0, 1, 2});
        REQUIRE(psi.has_value());
        CHECK(psi->size() == 1);
        CHECK(*psi == std::vector<int>{3});
    }
}

TEST_CASE("min_augmentation invariants on random models") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        ChordModel model = random_polygon_model(3 + seed % 3, 4 + seed % 7, seed * 31);
        UndirectedGraph g = build_adjacency(model);
        Rng rng(seed);
        std::vector<int> s;
        for (int c = 0; c < model.chord_count(); ++c) {
            if (rng.chance(0.4)) s.push_back(c);
        }
        UndirectedGraph on_s = g.induced([&] {
            Bitset b(g.size());
            for (int c : s) b.set(c);
            return b;
        }());
        const int deficiency = static_cast<int>(s.size()) - 2 * max_matching(on_s).size();

        auto psi = min_augmentation(model, s);
        if (psi) {
            CHECK(static_cast<int>(psi->size()) >= deficiency);
            std::vector<int> whole = s;
            whole.insert(whole.end(), psi->begin(), psi->end());
            CHECK(has_perfect_matching(g, whole));
            // Exhaustive baseline over every subset of the complement.
            std::vector<int> rest;
            for (int c = 0; c < model.chord_count(); ++c) {
                if (std::find(s.begin(), s.end(), c) == s.end()) rest.push_back(c);
            }
            std::size_t best = psi->size();
            bool found_smaller = false;
            for (std::uint64_t mask = 0; mask < (1ULL << rest.size()); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcountll(mask)) >= best) continue;
                std::vector<int> cand = s;
                for (std::size_t i = 0; i < rest.size(); ++i) {
                    if (mask & (1ULL << i)) cand.push_back(rest[i]);
                }
                if (has_perfect_matching(g, cand)) found_smaller = true;
            }
            CHECK_FALSE(found_smaller);
        }
    }
}
