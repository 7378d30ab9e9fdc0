#include <doctest.h>

#include <algorithm>
#include <set>

#include "polydom/errors.hpp"
#include "polydom/oracles.hpp"
#include "polydom/polygon.hpp"
#include "polydom/rng.hpp"
#include "test_support.hpp"

using namespace polydom;

namespace {

std::vector<int> all_chords(const ChordModel& m) {
    std::vector<int> v(m.chord_count());
    for (int i = 0; i < m.chord_count(); ++i) v[i] = i;
    return v;
}

// Quadratic reference for J - N[s].
std::vector<int> brute_undominated(const ChordModel& m, const std::vector<int>& s) {
    UndirectedGraph g = build_adjacency(m);
    Bitset bits(g.size());
    for (int c : s) bits.set(c);
    Bitset covered = g.closed_neighborhood(bits);
    std::vector<int> out;
    for (int c = 0; c < m.chord_count(); ++c) {
        if (!covered.test(c)) out.push_back(c);
    }
    return out;
}

std::vector<int> region_union(const RegionReport& r) { return r.all; }

// Reapply the interval characterization and compare with the explicit sets.
void check_intervals(const ChordModel& m, const RegionReport& report) {
    auto pairs = pair_restrictions(m);
    REQUIRE(pairs.size() == report.per_pair.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const PairRegion& region = report.per_pair[p];
        if (region.chords.empty()) {
            CHECK_FALSE(region.has_interval);
            continue;
        }
        REQUIRE(region.has_interval);
        const int si = pairs[p].side_i, sj = pairs[p].side_j;
        const bool wraps = region.adjacent && !(sj == si + 1);
        const int side_a = wraps ? sj : si;
        const int side_b = wraps ? si : sj;
        std::vector<int> via_interval;
        for (int c : pairs[p].chords) {
            int pa = m.endpoint_on_side(c, side_a);
            int pb = m.endpoint_on_side(c, side_b);
            if (pa >= region.interval[0] && pa <= region.interval[1] &&
                pb >= region.interval[2] && pb <= region.interval[3]) {
                via_interval.push_back(c);
            }
        }
        CHECK(via_interval == region.chords);
    }
}

// A random dominating set that induces a perfect matching: the endpoints of
// a maximal matching picked in randomized order.
struct PairedSample {
    std::vector<int> chords;
    Matching matching;
};

std::optional<PairedSample> sample_paired_dominating(const ChordModel& m, std::uint64_t seed) {
    UndirectedGraph g = build_adjacency(m);
    for (int v = 0; v < g.size(); ++v) {
        if (g.degree(v) == 0) return std::nullopt;
    }
    Rng rng(seed);
    std::vector<int> order = all_chords(m);
    rng.shuffle(order);
    Bitset used(g.size());
    PairedSample sample;
    for (int v : order) {
        if (used.test(v)) continue;
        for (int u : order) {
            if (u != v && !used.test(u) && g.adjacent(v, u)) {
                used.set(v);
                used.set(u);
                sample.matching.pairs.emplace_back(std::min(u, v), std::max(u, v));
                break;
            }
        }
    }
    for (auto [u, v] : sample.matching.pairs) {
        sample.chords.push_back(u);
        sample.chords.push_back(v);
    }
    std::sort(sample.chords.begin(), sample.chords.end());
    std::sort(sample.matching.pairs.begin(), sample.matching.pairs.end());
    return sample;
}

}  // namespace

TEST_CASE("outer boundary shapes") {
    ChordModel m = testsupport::figure2_polygon();
    SUBCASE("empty set gives empty boundaries") {
        BoundarySelection o = outer_boundary_of(m, {});
        for (const PairBoundary& pb : o.per_pair) CHECK(pb.empty());
        CHECK(o.all.empty());
    }
    SUBCASE("singleton restriction collapses the extremes") {
        BoundarySelection o = outer_boundary_of(m, {0});  // chord a on pair {0,1}
        int nonempty = 0;
        for (const PairBoundary& pb : o.per_pair) {
            if (!pb.empty()) {
                ++nonempty;
                CHECK(pb.set == std::vector<int>{0});
                CHECK(pb.roles[0] == 0);
                CHECK(pb.roles[1] == 0);
            }
        }
        CHECK(nonempty == 1);
    }
    SUBCASE("full set takes per-pair extremes") {
        BoundarySelection o = outer_boundary_of(m, all_chords(m));
        auto pairs = pair_restrictions(m);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            CHECK_FALSE(o.per_pair[p].empty());
            for (int c : o.per_pair[p].set) {
                CHECK(std::find(pairs[p].chords.begin(), pairs[p].chords.end(), c) !=
                      pairs[p].chords.end());
            }
        }
    }
}

TEST_CASE("undominated regions match brute force") {
    SUBCASE("no boundary leaves everything") {
        ChordModel m = testsupport::figure2_polygon();
        RegionReport r = undominated_after_outer(m, outer_boundary_of(m, {}));
        CHECK(region_union(r) == all_chords(m));
    }
    SUBCASE("full boundary dominates everything") {
        ChordModel m = testsupport::figure2_polygon();
        BoundarySelection o = outer_boundary_of(m, all_chords(m));
        // Not everything is a boundary chord, but every chord is dominated
        // in this particular model.
        RegionReport r = undominated_after_outer(m, o);
        CHECK(region_union(r) == brute_undominated(m, o.all));
    }
    SUBCASE("random dominating sets, outer regions + intervals") {
        int checked = 0;
        for (std::uint64_t seed = 1; checked < 60; ++seed) {
            REQUIRE(seed < 500);
            ChordModel m = random_polygon_model(3 + seed % 3, 4 + seed % 9, seed * 131);
            UndirectedGraph g = build_adjacency(m);
            Rng rng(seed);
            // Grow a random dominating set.
            std::vector<int> order = all_chords(m);
            rng.shuffle(order);
            Bitset covered(g.size());
            std::vector<int> d;
            for (int c : order) {
                if (!covered.test(c)) {
                    d.push_back(c);
                    covered |= g.closed_neighborhood(c);
                }
            }
            std::sort(d.begin(), d.end());
            REQUIRE(is_dominating_set(g, d));
            BoundarySelection o = outer_boundary_of(m, d);
            RegionReport r = undominated_after_outer(m, o);
            CHECK(region_union(r) == brute_undominated(m, o.all));
            check_intervals(m, r);
            ++checked;
        }
    }
    SUBCASE("random paired dominating sets, inner regions + intervals") {
        int checked = 0;
        for (std::uint64_t seed = 1; checked < 60; ++seed) {
            REQUIRE(seed < 500);
            ChordModel m = random_polygon_model(3 + seed % 3, 4 + seed % 9, seed * 733);
            auto sample = sample_paired_dominating(m, seed);
            if (!sample) continue;
            UndirectedGraph g = build_adjacency(m);
            if (!is_dominating_set(g, sample->chords)) continue;
            BoundarySelection o = outer_boundary_of(m, sample->chords);
            BoundarySelection i = inner_boundary_of(m, sample->chords, sample->matching, o);
            // Inner chords always belong to D'_ij.
            for (int c : i.all) {
                CHECK(std::find(sample->chords.begin(), sample->chords.end(), c) !=
                      sample->chords.end());
            }
            std::vector<int> both = o.all;
            both.insert(both.end(), i.all.begin(), i.all.end());
            std::sort(both.begin(), both.end());
            both.erase(std::unique(both.begin(), both.end()), both.end());
            RegionReport r2 = undominated_after_boundaries(m, o, i);
            CHECK(region_union(r2) == brute_undominated(m, both));
            check_intervals(m, r2);
            ++checked;
        }
    }
}

TEST_CASE("inner boundary definition details") {
    ChordModel m = testsupport::figure2_polygon();
    UndirectedGraph g = build_adjacency(m);
    // d = {a, c, f, h}: matched a-c (pair {0,3} x {0,1}? both cross) across
    // different side pairs, f-h likewise.
    std::vector<int> d{0, 2, 5, 7};
    Matching matching;
    matching.pairs = {{0, 2}, {5, 7}};
    REQUIRE(g.adjacent(0, 2));
    REQUIRE(g.adjacent(5, 7));
    BoundarySelection o = outer_boundary_of(m, d);
    BoundarySelection i = inner_boundary_of(m, d, matching, o);
    // All pairs matched across side pairs: M_ij is empty, so the inner
    // extremes are computed over d itself wherever J' is nonempty.
    for (int c : i.all) {
        CHECK(std::find(d.begin(), d.end(), c) != d.end());
    }

    Matching bogus;
    bogus.pairs = {{0, 5}};
    CHECK_THROWS_AS(inner_boundary_of(m, d, bogus, o), std::invalid_argument);
}

TEST_CASE("boundary enumeration") {
    SUBCASE("single chord on an adjacent pair") {
        ChordModel m = ChordModel::create({Chord{1, 2}}, std::vector<int>{1, 1, 0});
        std::vector<std::pair<std::size_t, std::size_t>> sizes;
        enumerate_boundaries(m, [&](const BoundarySelection& o, const BoundarySelection& i) {
            sizes.emplace_back(o.all.size(), i.all.size());
        });
        // outer empty (leaves the chord undominated, no inner available) and
        // outer = {c} (region empty, inner forced empty).
        CHECK(sizes == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 0}});
    }
    SUBCASE("pruning rule holds on every candidate") {
        for (std::uint64_t seed : {3ULL, 8ULL, 21ULL}) {
            ChordModel m = random_polygon_model(4, 7, seed);
            auto pairs = pair_restrictions(m);
            enumerate_boundaries(m, [&](const BoundarySelection& o, const BoundarySelection& i) {
                for (std::size_t p = 0; p < pairs.size(); ++p) {
                    if (i.per_pair[p].empty()) continue;
                    const int lo = pairs[p].side_i, hi = pairs[p].side_j;
                    for (std::size_t q = 0; q < pairs.size(); ++q) {
                        if (o.per_pair[q].empty()) continue;
                        const int a = pairs[q].side_i, b = pairs[q].side_j;
                        // No side pair may separate a pair with nonempty inner:
                        // one side strictly inside (lo,hi), the other strictly
                        // inside (hi,lo) circularly.
                        auto strictly_between = [&](int s, int from, int to) {
                            for (int t = (from + 1) % m.side_count(); t != to;
                                 t = (t + 1) % m.side_count()) {
                                if (t == s) return true;
                            }
                            return false;
                        };
                        const bool separates =
                            (strictly_between(a, lo, hi) && strictly_between(b, hi, lo)) ||
                            (strictly_between(b, lo, hi) && strictly_between(a, hi, lo));
                        CHECK_FALSE(separates);
                    }
                }
            });
        }
    }
    SUBCASE("enumeration contains the boundary of the optimum") {
        int checked = 0;
        for (std::uint64_t seed = 1; checked < 25; ++seed) {
            REQUIRE(seed < 300);
            ChordModel m = random_polygon_model(3 + seed % 3, 3 + seed % 6, seed * 311);
            UndirectedGraph g = build_adjacency(m);
            auto opt = min_paired_dominating_set_bruteforce(g);
            if (!opt) continue;
            auto pm = perfect_matching_of(g, [&] {
                Bitset b(g.size());
                for (int c : *opt) b.set(c);
                return b;
            }());
            REQUIRE(pm.has_value());
            BoundarySelection o_true = outer_boundary_of(m, *opt);
            BoundarySelection i_true = inner_boundary_of(m, *opt, *pm, o_true);
            bool present = false;
            enumerate_boundaries(m, [&](const BoundarySelection& o, const BoundarySelection& i) {
                if (o.all == o_true.all && i.all == i_true.all) present = true;
            });
            CHECK_MESSAGE(present, "seed ", seed);
            ++checked;
        }
    }
}

TEST_CASE("pair subsolvers match exhaustive search") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        ChordModel m = random_polygon_model(3 + seed % 3, 3 + seed % 8, seed * 503);
        UndirectedGraph g = build_adjacency(m);
        auto pairs = pair_restrictions(m);
        Rng rng(seed);
        for (const auto& pr : pairs) {
            if (pr.size() > 10) continue;
            std::vector<int> target;
            for (int c : pr.chords) {
                if (rng.chance(0.5)) target.push_back(c);
            }
            auto got = min_constrained_paired_dom_on_pair(m, pr, target, {});
            // Exhaustive reference over subsets of the pair.
            std::optional<std::vector<int>> want;
            for (std::uint64_t mask = 0; mask < (1ULL << pr.size()); ++mask) {
                std::vector<int> cand;
                for (int i = 0; i < pr.size(); ++i) {
                    if (mask & (1ULL << i)) cand.push_back(pr.chords[i]);
                }
                Bitset cover(g.size());
                for (int c : cand) cover |= g.closed_neighborhood(c);
                bool covers = true;
                for (int t : target) covers = covers && cover.test(t);
                if (!covers || !has_perfect_matching(g, cand)) continue;
                if (!want || cand.size() < want->size()) want = cand;
            }
            if (want) {
                REQUIRE(got.has_value());
                CHECK(got->size() == want->size());
            } else {
                CHECK_FALSE(got.has_value());
            }

            if (target.empty()) {
                auto empty = min_constrained_dom_on_pair(m, pr, {});
                REQUIRE(empty.has_value());
                CHECK(empty->empty());
            }
        }
    }
}

TEST_CASE("polygon solvers on the figure fixture") {
    ChordModel m = testsupport::figure2_polygon();
    SolveResult ds = solve_min_ds_polygon(m);
    CHECK(ds.feasible);
    CHECK(ds.chords.size() == 2);
    SolveResult pds = solve_min_pds_polygon(m);
    CHECK(pds.feasible);
    CHECK(pds.chords.size() == 4);
    UndirectedGraph g = build_adjacency(m);
    CHECK(is_dominating_set(g, ds.chords));
    CHECK(is_paired_dominating_set(g, pds.chords));
}

TEST_CASE("two crossing chords on a 3-polygon") {
    ChordModel m = ChordModel::create({Chord{1, 3}, Chord{2, 4}}, std::vector<int>{2, 1, 1});
    SolveResult pds = solve_min_pds_polygon(m);
    CHECK(pds.feasible);
    CHECK(pds.chords == std::vector<int>{0, 1});
    SolveResult ds = solve_min_ds_polygon(m);
    CHECK(ds.chords.size() == 1);
}

TEST_CASE("isolated chord makes paired domination infeasible") {
    // Three pairwise non-crossing chords.
    ChordModel m = ChordModel::create({Chord{2, 3}, Chord{1, 6}, Chord{4, 5}},
                                      std::vector<int>{2, 2, 2});
    UndirectedGraph g = build_adjacency(m);
    REQUIRE(g.edge_count() == 0);
    CHECK_FALSE(solve_min_pds_polygon(m).feasible);
    CHECK(solve_min_ds_polygon(m).chords.size() == 3);
}

TEST_CASE("solver equals brute force on random models") {
    int checked = 0;
    for (std::uint64_t seed = 1; checked < 40; ++seed) {
        REQUIRE(seed < 400);
        int k = 3 + static_cast<int>(seed % 3);
        int mm = 2 + static_cast<int>(seed % 9);
        ChordModel model = random_polygon_model(k, mm, seed * 2027);
        UndirectedGraph g = build_adjacency(model);

        SolveResult ds = solve_min_ds_polygon(model);
        CHECK(ds.chords.size() == min_dominating_set_bruteforce(g).size());
        CHECK(is_dominating_set(g, ds.chords));

        auto want = min_paired_dominating_set_bruteforce(g);
        SolveResult pds = solve_min_pds_polygon(model);
        CHECK(pds.feasible == want.has_value());
        if (want) {
            CHECK(pds.chords.size() == want->size());
            CHECK(is_paired_dominating_set(g, pds.chords));
        }
        ++checked;
    }
}

TEST_CASE("parallel solver matches the serial reference") {
    for (std::uint64_t seed : {5ULL, 17ULL, 29ULL, 41ULL}) {
        ChordModel model = random_polygon_model(3 + seed % 3, 6 + seed % 5, seed * 101);
        SolveOptions serial;
        SolveOptions par;
        par.jobs = 4;
        SolveResult a = solve_min_pds_polygon(model, serial);
        SolveResult b = solve_min_pds_polygon(model, par);
        CHECK(a.feasible == b.feasible);
        CHECK(a.chords == b.chords);
        SolveResult c = solve_min_ds_polygon(model, serial);
        SolveResult d = solve_min_ds_polygon(model, par);
        CHECK(c.chords == d.chords);
    }
}

TEST_CASE("solver requires a polygon model") {
    ChordModel m = ChordModel::create({Chord{1, 3}, Chord{2, 4}});
    CHECK_THROWS_AS(solve_min_pds_polygon(m), UnsupportedError);
}
