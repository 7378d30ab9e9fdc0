#include "polydom/polygon.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <tuple>

#include "polydom/combinatorics.hpp"
#include "polydom/errors.hpp"
#include "polydom/oracles.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polydom {

void BoundarySelection::rebuild_union() {
    all.clear();
    for (const PairBoundary& pb : per_pair) all.insert(all.end(), pb.set.begin(), pb.set.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
}

namespace {

struct PairGeom {
    int side_i = 0, side_j = 0;
    bool adjacent = false;
    // When adjacent, the corner runs from `first` to `second` counterclockwise.
    int first = 0, second = 0;
};

PairGeom pair_geometry(const ChordModel& model, const PairRestriction& pr) {
    PairGeom g;
    g.side_i = pr.side_i;
    g.side_j = pr.side_j;
    const int k = model.side_count();
    if (pr.side_j == pr.side_i + 1) {
        g.adjacent = true;
        g.first = pr.side_i;
        g.second = pr.side_j;
    } else if (pr.side_i == 0 && pr.side_j == k - 1) {
        g.adjacent = true;
        g.first = pr.side_j;
        g.second = pr.side_i;
    }
    return g;
}

struct Layout {
    std::vector<PairRestriction> pairs;
    std::vector<PairGeom> geom;
    std::vector<int> pair_of;  // chord id -> pair index

    explicit Layout(const ChordModel& model)
        : pairs(pair_restrictions(model)), pair_of(model.chord_count(), -1) {
        geom.reserve(pairs.size());
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            geom.push_back(pair_geometry(model, pairs[p]));
            for (int c : pairs[p].chords) pair_of[c] = static_cast<int>(p);
        }
    }
};

int end_on(const ChordModel& model, int chord, int side) {
    return model.endpoint_on_side(chord, side);
}

PairBoundary make_boundary(const ChordModel& model, const PairGeom& g,
                           const std::vector<int>& members, bool inner) {
    PairBoundary pb;
    if (members.empty()) return pb;
    if (g.adjacent) {
        pb.kind = PairBoundary::Kind::Adjacent;
        // Outer keeps the outward extremes, inner the corner-facing ones.
        int lo = members[0], hi = members[0];
        for (int c : members) {
            const int cf = end_on(model, c, g.first), lf = end_on(model, lo, g.first);
            const int cs = end_on(model, c, g.second), hs = end_on(model, hi, g.second);
            if (inner ? cf > lf : cf < lf) lo = c;
            if (inner ? cs < hs : cs > hs) hi = c;
        }
        pb.roles = {lo, hi, -1, -1};
        pb.set = {lo, hi};
    } else {
        pb.kind = PairBoundary::Kind::Four;
        int li = members[0], ri = members[0], lj = members[0], rj = members[0];
        for (int c : members) {
            if (end_on(model, c, g.side_i) < end_on(model, li, g.side_i)) li = c;
            if (end_on(model, c, g.side_i) > end_on(model, ri, g.side_i)) ri = c;
            if (end_on(model, c, g.side_j) < end_on(model, lj, g.side_j)) lj = c;
            if (end_on(model, c, g.side_j) > end_on(model, rj, g.side_j)) rj = c;
        }
        pb.roles = {li, ri, lj, rj};
        pb.set = {li, ri, lj, rj};
    }
    std::sort(pb.set.begin(), pb.set.end());
    pb.set.erase(std::unique(pb.set.begin(), pb.set.end()), pb.set.end());
    return pb;
}

// True when every member of the set carries at least one extreme role, i.e.
// the set can be the designated boundary of some superset.
bool roles_cover_set(const PairBoundary& pb) {
    for (int c : pb.set) {
        bool used = false;
        for (int r : pb.roles) used = used || (r == c);
        if (!used) return false;
    }
    return true;
}

std::vector<char> dominated_flags(const ChordModel& model, const std::vector<int>& s) {
    std::vector<char> flags(model.chord_count(), 0);
    for (int c : s) flags[c] = 1;
    for (int x = 0; x < model.chord_count(); ++x) {
        if (flags[x]) continue;
        for (int b : s) {
            if (chords_intersect(model.chord(x), model.chord(b))) {
                flags[x] = 1;
                break;
            }
        }
    }
    return flags;
}

RegionReport region_from_flags(const ChordModel& model, const Layout& lay,
                               const std::vector<char>& dominated) {
    RegionReport report;
    report.per_pair.resize(lay.pairs.size());
    for (std::size_t p = 0; p < lay.pairs.size(); ++p) {
        PairRegion& region = report.per_pair[p];
        const PairGeom& g = lay.geom[p];
        region.adjacent = g.adjacent;
        for (int c : lay.pairs[p].chords) {
            if (!dominated[c]) region.chords.push_back(c);
        }
        report.all.insert(report.all.end(), region.chords.begin(), region.chords.end());
        if (region.chords.empty()) continue;
        region.has_interval = true;
        // Extreme undominated endpoints per side. For an adjacent pair the
        // marks facing the corner ([0] on the first side, [3] on the second)
        // delimit the wrap-around interval; a chord belongs to the region
        // when both endpoints fall inside their side's range.
        const int sa = g.adjacent ? g.first : g.side_i;
        const int sb = g.adjacent ? g.second : g.side_j;
        int lo_a = end_on(model, region.chords[0], sa), hi_a = lo_a;
        int lo_b = end_on(model, region.chords[0], sb), hi_b = lo_b;
        for (int c : region.chords) {
            lo_a = std::min(lo_a, end_on(model, c, sa));
            hi_a = std::max(hi_a, end_on(model, c, sa));
            lo_b = std::min(lo_b, end_on(model, c, sb));
            hi_b = std::max(hi_b, end_on(model, c, sb));
        }
        region.interval = {lo_a, hi_a, lo_b, hi_b};
    }
    std::sort(report.all.begin(), report.all.end());
    return report;
}

}  // namespace

BoundarySelection outer_boundary_of(const ChordModel& model, const std::vector<int>& d) {
    Layout lay(model);
    std::vector<char> in_d(model.chord_count(), 0);
    for (int c : d) in_d[c] = 1;
    BoundarySelection sel;
    sel.per_pair.resize(lay.pairs.size());
    for (std::size_t p = 0; p < lay.pairs.size(); ++p) {
        std::vector<int> members;
        for (int c : lay.pairs[p].chords) {
            if (in_d[c]) members.push_back(c);
        }
        sel.per_pair[p] = make_boundary(model, lay.geom[p], members, /*inner=*/false);
    }
    sel.rebuild_union();
    return sel;
}

RegionReport undominated_after_outer(const ChordModel& model, const BoundarySelection& o) {
    Layout lay(model);
    return region_from_flags(model, lay, dominated_flags(model, o.all));
}

BoundarySelection inner_boundary_of(const ChordModel& model, const std::vector<int>& d,
                                    const Matching& matching, const BoundarySelection& o) {
    Layout lay(model);
    std::vector<char> in_d(model.chord_count(), 0);
    for (int c : d) in_d[c] = 1;
    std::vector<int> partner(model.chord_count(), -1);
    std::size_t covered = 0;
    for (auto [u, v] : matching.pairs) {
        if (u < 0 || v < 0 || u >= model.chord_count() || v >= model.chord_count() ||
            !in_d[u] || !in_d[v] || partner[u] != -1 || partner[v] != -1 ||
            !chords_intersect(model.chord(u), model.chord(v))) {
            throw std::invalid_argument("matching is not a perfect matching of the given set");
        }
        partner[u] = v;
        partner[v] = u;
        covered += 2;
    }
    if (covered != d.size()) {
        throw std::invalid_argument("matching is not a perfect matching of the given set");
    }

    const std::vector<char> j_prime = dominated_flags(model, o.all);
    BoundarySelection sel;
    sel.per_pair.resize(lay.pairs.size());
    for (std::size_t p = 0; p < lay.pairs.size(); ++p) {
        bool pair_has_undominated = false;
        for (int c : lay.pairs[p].chords) pair_has_undominated = pair_has_undominated || !j_prime[c];
        if (!pair_has_undominated) continue;
        // D'_ij = (D_ij minus same-pair matched chords) union O_ij.
        std::vector<int> members;
        for (int c : lay.pairs[p].chords) {
            if (!in_d[c]) continue;
            const bool pair_matched = partner[c] != -1 && lay.pair_of[partner[c]] == static_cast<int>(p);
            if (!pair_matched) members.push_back(c);
        }
        for (int c : o.per_pair[p].set) {
            if (std::find(members.begin(), members.end(), c) == members.end()) members.push_back(c);
        }
        std::sort(members.begin(), members.end());
        sel.per_pair[p] = make_boundary(model, lay.geom[p], members, /*inner=*/true);
    }
    sel.rebuild_union();
    return sel;
}

RegionReport undominated_after_boundaries(const ChordModel& model, const BoundarySelection& o,
                                          const BoundarySelection& i) {
    Layout lay(model);
    std::vector<int> both = o.all;
    both.insert(both.end(), i.all.begin(), i.all.end());
    std::sort(both.begin(), both.end());
    both.erase(std::unique(both.begin(), both.end()), both.end());
    return region_from_flags(model, lay, dominated_flags(model, both));
}

namespace {

bool boundary_less(const PairBoundary& a, const PairBoundary& b) {
    if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
    return a.set < b.set;
}

// All designatable outer extreme sets of one pair, empty option first.
std::vector<PairBoundary> outer_options(const ChordModel& model, const PairRestriction& pr,
                                        const PairGeom& g) {
    std::vector<PairBoundary> opts;
    opts.emplace_back();  // Empty
    const int n = pr.size();
    const int max_size = g.adjacent ? 2 : 4;
    for (int t = 1; t <= std::min(max_size, n); ++t) {
        for_each_combination(n, t, [&](const std::vector<int>& idx) {
            std::vector<int> members;
            members.reserve(idx.size());
            for (int i : idx) members.push_back(pr.chords[i]);
            PairBoundary pb = make_boundary(model, g, members, /*inner=*/false);
            if (pb.set.size() == members.size() && roles_cover_set(pb)) opts.push_back(std::move(pb));
            return true;
        });
    }
    std::stable_sort(opts.begin(), opts.end(), boundary_less);
    return opts;
}

// Inner extreme sets of an adjacent pair, constrained by the outer choice:
// the inner extremes live in a superset of O_ij, so they cannot be left of
// its first-side maximum nor right of its second-side minimum.
std::vector<PairBoundary> inner_adjacent_options(const ChordModel& model,
                                                 const PairRestriction& pr, const PairGeom& g,
                                                 const PairBoundary& outer) {
    int outer_max_first = 0, outer_min_second = 0;
    bool bound = !outer.empty();
    if (bound) {
        outer_max_first = end_on(model, outer.set[0], g.first);
        outer_min_second = end_on(model, outer.set[0], g.second);
        for (int c : outer.set) {
            outer_max_first = std::max(outer_max_first, end_on(model, c, g.first));
            outer_min_second = std::min(outer_min_second, end_on(model, c, g.second));
        }
    }
    std::vector<PairBoundary> opts;
    const int n = pr.size();
    for (int t = 1; t <= std::min(2, n); ++t) {
        for_each_combination(n, t, [&](const std::vector<int>& idx) {
            std::vector<int> members;
            for (int i : idx) members.push_back(pr.chords[i]);
            PairBoundary pb = make_boundary(model, g, members, /*inner=*/true);
            if (pb.set.size() != members.size() || !roles_cover_set(pb)) return true;
            if (bound) {
                if (end_on(model, pb.roles[0], g.first) < outer_max_first) return true;
                if (end_on(model, pb.roles[1], g.second) > outer_min_second) return true;
            }
            opts.push_back(std::move(pb));
            return true;
        });
    }
    std::stable_sort(opts.begin(), opts.end(), boundary_less);
    return opts;
}

// The derived inner selection of a non-adjacent pair equals the outer
// extremes: the outer chords stay in D'_ij, so they remain extremal.
PairBoundary inner_four_from_outer(const PairBoundary& outer) { return outer; }

template <typename Yield>
void enumerate_impl(const ChordModel& model, const Layout& lay, Yield&& yield) {
    const std::size_t np = lay.pairs.size();
    std::vector<std::vector<PairBoundary>> outer(np);
    for (std::size_t p = 0; p < np; ++p) {
        outer[p] = outer_options(model, lay.pairs[p], lay.geom[p]);
    }
    BoundarySelection o_sel, i_sel;
    o_sel.per_pair.resize(np);
    i_sel.per_pair.resize(np);
    std::vector<const std::vector<PairBoundary>*> inner_opts(np);

    auto emit = [&]() {
        o_sel.rebuild_union();
        i_sel.rebuild_union();
        yield(o_sel, i_sel);
    };

    std::function<void(std::size_t)> walk_inner_at = [&](std::size_t p) {
        if (p == np) {
            emit();
            return;
        }
        for (const PairBoundary& opt : *inner_opts[p]) {
            i_sel.per_pair[p] = opt;
            walk_inner_at(p + 1);
        }
    };

    std::function<void(std::size_t)> walk_outer = [&](std::size_t p) {
        if (p == np) {
            // Inner choices correspond to the regions this outer choice leaves.
            std::vector<int> union_o;
            for (const PairBoundary& pb : o_sel.per_pair)
                union_o.insert(union_o.end(), pb.set.begin(), pb.set.end());
            std::sort(union_o.begin(), union_o.end());
            union_o.erase(std::unique(union_o.begin(), union_o.end()), union_o.end());
            const std::vector<char> flags = dominated_flags(model, union_o);
            static const std::vector<PairBoundary> kEmptyOnly{PairBoundary{}};
            std::vector<std::vector<PairBoundary>> adjacent_opts(np);
            for (std::size_t q = 0; q < np; ++q) {
                bool undominated = false;
                for (int c : lay.pairs[q].chords) undominated = undominated || !flags[c];
                if (!undominated || o_sel.per_pair[q].empty()) {
                    inner_opts[q] = &kEmptyOnly;
                } else if (lay.geom[q].adjacent) {
                    adjacent_opts[q] =
                        inner_adjacent_options(model, lay.pairs[q], lay.geom[q], o_sel.per_pair[q]);
                    inner_opts[q] = &adjacent_opts[q];
                } else {
                    adjacent_opts[q] = {inner_four_from_outer(o_sel.per_pair[q])};
                    inner_opts[q] = &adjacent_opts[q];
                }
            }
            walk_inner_at(0);
            return;
        }
        for (const PairBoundary& opt : outer[p]) {
            o_sel.per_pair[p] = opt;
            walk_outer(p + 1);
        }
    };
    walk_outer(0);
}

}  // namespace

void enumerate_boundaries(const ChordModel& model,
                          const std::function<void(const BoundarySelection&,
                                                   const BoundarySelection&)>& yield) {
    if (!model.has_sides()) throw UnsupportedError("boundary enumeration requires a polygon model");
    Layout lay(model);
    enumerate_impl(model, lay, yield);
}

std::uint64_t count_boundaries(const ChordModel& model) {
    std::uint64_t count = 0;
    enumerate_boundaries(model, [&](const BoundarySelection&, const BoundarySelection&) { ++count; });
    return count;
}

namespace {

// Exhaustive minimum cover of `target` from `pool`, smallest-then-lex.
std::optional<std::vector<int>> pair_cover_core(const UndirectedGraph& g,
                                                const std::vector<int>& pool,
                                                const Bitset& target_bits, bool need_matching,
                                                int threshold) {
    if (static_cast<int>(pool.size()) > threshold) {
        throw UnsupportedError("pair subproblem exceeds the exhaustive-search threshold (" +
                               std::to_string(pool.size()) + " > " + std::to_string(threshold) +
                               " chords)");
    }
    const int n = static_cast<int>(pool.size());
    std::optional<std::vector<int>> best;
    for (int t = 0; t <= n && !best; ++t) {
        if (need_matching && t % 2 != 0) continue;
        for_each_combination(n, t, [&](const std::vector<int>& idx) {
            Bitset cover(g.size());
            Bitset members(g.size());
            for (int i : idx) {
                cover |= g.closed_neighborhood(pool[i]);
                members.set(pool[i]);
            }
            if ((target_bits & ~cover).any()) return true;
            if (need_matching && !has_perfect_matching(g, members)) return true;
            std::vector<int> out;
            out.reserve(idx.size());
            for (int i : idx) out.push_back(pool[i]);
            best = std::move(out);
            return false;
        });
    }
    return best;
}

std::optional<std::vector<int>> pair_cover(const UndirectedGraph& g, const PairRestriction& pr,
                                           const std::vector<int>& target,
                                           const std::vector<int>& excluded, bool need_matching,
                                           int threshold) {
    std::vector<int> pool;
    for (int c : pr.chords) {
        if (!std::binary_search(excluded.begin(), excluded.end(), c)) pool.push_back(c);
    }
    Bitset target_bits(g.size());
    for (int c : target) target_bits.set(c);
    return pair_cover_core(g, pool, target_bits, need_matching, threshold);
}

}  // namespace

std::optional<std::vector<int>> min_constrained_paired_dom_on_pair(
    const ChordModel& model, const PairRestriction& pair, const std::vector<int>& target,
    const std::vector<int>& excluded, int threshold) {
    std::vector<int> ex = excluded;
    std::sort(ex.begin(), ex.end());
    return pair_cover(build_adjacency(model), pair, target, ex, /*need_matching=*/true, threshold);
}

std::optional<std::vector<int>> min_constrained_dom_on_pair(const ChordModel& model,
                                                            const PairRestriction& pair,
                                                            const std::vector<int>& target,
                                                            const std::vector<int>& excluded,
                                                            int threshold) {
    std::vector<int> ex = excluded;
    std::sort(ex.begin(), ex.end());
    return pair_cover(build_adjacency(model), pair, target, ex, /*need_matching=*/false, threshold);
}

namespace {

struct SolverCtx {
    const ChordModel& model;
    Layout lay;
    UndirectedGraph graph;
    std::vector<std::vector<PairBoundary>> outer;
    int threshold;
    bool paired;

    SolverCtx(const ChordModel& m, int thr, bool prd)
        : model(m), lay(m), graph(build_adjacency(m)), threshold(thr), paired(prd) {
        outer.resize(lay.pairs.size());
        for (std::size_t p = 0; p < lay.pairs.size(); ++p) {
            outer[p] = outer_options(model, lay.pairs[p], lay.geom[p]);
        }
    }
};

bool candidate_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct Best {
    bool found = false;
    std::vector<int> chords;

    void consider(const std::vector<int>& cand) {
        if (!found || candidate_less(cand, chords)) {
            chords = cand;
            found = true;
        }
    }
    void merge(const Best& other) {
        if (other.found) consider(other.chords);
    }
    std::size_t bound() const { return found ? chords.size() : SIZE_MAX; }
};

using Memo = std::map<std::tuple<int, std::vector<int>, std::vector<int>>,
                      std::optional<std::vector<int>>>;

const std::optional<std::vector<int>>& memo_pair_cover(const SolverCtx& ctx, Memo& memo, int p,
                                                       const std::vector<int>& target,
                                                       const std::vector<int>& excluded) {
    auto key = std::tuple(p, target, excluded);
    auto it = memo.find(key);
    if (it == memo.end()) {
        auto result =
            pair_cover(ctx.graph, ctx.lay.pairs[p], target, excluded, ctx.paired, ctx.threshold);
        it = memo.emplace(std::move(key), std::move(result)).first;
    }
    return it->second;
}

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

// One fully-specified (O, I) candidate: run the per-pair subsolvers against
// the remaining region, make the boundary matchable, verify, and offer the
// result. Every offered set is independently verified, so extra candidates
// can never drag the optimum below the true minimum.
void evaluate_candidate(const SolverCtx& ctx, Memo& memo,
                        const std::vector<const PairBoundary*>& o_choice,
                        const std::vector<const PairBoundary*>& i_choice,
                        const std::vector<int>& s, Best& best) {
    const std::size_t np = ctx.lay.pairs.size();
    Bitset s_bits(ctx.graph.size());
    for (int c : s) s_bits.set(c);
    const Bitset dominated = ctx.graph.closed_neighborhood(s_bits);

    std::vector<int> d_all = s;
    for (std::size_t p = 0; p < np; ++p) {
        std::vector<int> target;
        for (int c : ctx.lay.pairs[p].chords) {
            if (!dominated.test(c)) target.push_back(c);
        }
        std::vector<int> excluded = o_choice[p]->set;
        if (ctx.paired) excluded = sorted_union(std::move(excluded), i_choice[p]->set);
        const auto& part = memo_pair_cover(ctx, memo, static_cast<int>(p), target, excluded);
        if (!part) return;  // no feasible replacement for this pair
        d_all.insert(d_all.end(), part->begin(), part->end());
    }
    std::sort(d_all.begin(), d_all.end());
    d_all.erase(std::unique(d_all.begin(), d_all.end()), d_all.end());

    if (!ctx.paired) {
        if (d_all.size() <= best.bound() && is_dominating_set(ctx.graph, d_all)) {
            best.consider(d_all);
        }
        return;
    }

    // Boundary augmentation: try the plain minimum, the one avoiding the
    // subsolver output, and a joint augmentation of the assembled set.
    std::vector<std::vector<int>> candidates;
    std::vector<int> d_without_s;
    for (int c : d_all) {
        if (!std::binary_search(s.begin(), s.end(), c)) d_without_s.push_back(c);
    }
    if (auto psi = min_augmentation(ctx.graph, s)) {
        candidates.push_back(sorted_union(d_all, *psi));
    }
    if (auto psi = min_augmentation(ctx.graph, s, d_without_s)) {
        candidates.push_back(sorted_union(d_all, *psi));
    }
    if (auto psi = min_augmentation(ctx.graph, d_all)) {
        candidates.push_back(sorted_union(d_all, *psi));
    }
    for (const std::vector<int>& cand : candidates) {
        if (cand.size() > best.bound()) continue;
        if (!is_dominating_set(ctx.graph, cand)) continue;
        if (!has_perfect_matching(ctx.graph, cand)) continue;
        best.consider(cand);
    }
}

// Walk every inner assignment compatible with the outer choice and the J'
// regions it leaves, evaluating at the leaves.
void walk_candidates_for_outer(const SolverCtx& ctx, Memo& memo,
                               const std::vector<const PairBoundary*>& o_choice,
                               std::atomic<std::size_t>* shared_bound, Best& best,
                               std::uint64_t& evaluated) {
    const std::size_t np = ctx.lay.pairs.size();
    std::vector<int> union_o;
    for (const PairBoundary* pb : o_choice) union_o.insert(union_o.end(), pb->set.begin(), pb->set.end());
    std::sort(union_o.begin(), union_o.end());
    union_o.erase(std::unique(union_o.begin(), union_o.end()), union_o.end());

    std::size_t limit = shared_bound ? shared_bound->load(std::memory_order_relaxed) : best.bound();
    limit = std::min(limit, best.bound());
    if (union_o.size() > limit) return;

    Bitset o_bits(ctx.graph.size());
    for (int c : union_o) o_bits.set(c);
    const Bitset dominated = ctx.graph.closed_neighborhood(o_bits);

    // An outer choice leaving a pair undominated while designating nothing on
    // it can never be the boundary of a dominating set.
    std::vector<std::vector<int>> region(np);
    for (std::size_t p = 0; p < np; ++p) {
        for (int c : ctx.lay.pairs[p].chords) {
            if (!dominated.test(c)) region[p].push_back(c);
        }
        if (!region[p].empty() && o_choice[p]->empty()) return;
    }

    if (!ctx.paired) {
        ++evaluated;
        static const PairBoundary kEmpty{};
        std::vector<const PairBoundary*> no_inner(np, &kEmpty);
        evaluate_candidate(ctx, memo, o_choice, no_inner, union_o, best);
        return;
    }

    static const std::vector<PairBoundary> kEmptyOnly{PairBoundary{}};
    std::vector<std::vector<PairBoundary>> storage(np);
    std::vector<const std::vector<PairBoundary>*> inner_opts(np);
    for (std::size_t p = 0; p < np; ++p) {
        if (region[p].empty()) {
            inner_opts[p] = &kEmptyOnly;
        } else if (ctx.lay.geom[p].adjacent) {
            storage[p] = inner_adjacent_options(ctx.model, ctx.lay.pairs[p], ctx.lay.geom[p],
                                                *o_choice[p]);
            inner_opts[p] = &storage[p];
        } else {
            storage[p] = {inner_four_from_outer(*o_choice[p])};
            inner_opts[p] = &storage[p];
        }
        if (inner_opts[p]->empty()) return;
    }

    std::vector<const PairBoundary*> i_choice(np);
    std::function<void(std::size_t)> walk = [&](std::size_t p) {
        if (p == np) {
            std::vector<int> s = union_o;
            for (const PairBoundary* pb : i_choice)
                s.insert(s.end(), pb->set.begin(), pb->set.end());
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            std::size_t lim =
                shared_bound ? shared_bound->load(std::memory_order_relaxed) : best.bound();
            lim = std::min(lim, best.bound());
            if (s.size() > lim) return;
            ++evaluated;
            evaluate_candidate(ctx, memo, o_choice, i_choice, s, best);
            if (shared_bound && best.found) {
                std::size_t cur = shared_bound->load(std::memory_order_relaxed);
                while (best.chords.size() < cur &&
                       !shared_bound->compare_exchange_weak(cur, best.chords.size())) {
                }
            }
            return;
        }
        for (const PairBoundary& opt : *inner_opts[p]) {
            i_choice[p] = &opt;
            walk(p + 1);
        }
    };
    walk(0);
}

SolveResult solve_polygon(const ChordModel& model, const SolveOptions& opts, bool paired) {
    if (!model.has_sides()) throw UnsupportedError("polygon solver requires a polygon model");
    SolveResult result;
    if (model.chord_count() == 0) return result;

    SolverCtx ctx(model, opts.subsolver_threshold, paired);
    if (paired) {
        for (int v = 0; v < ctx.graph.size(); ++v) {
            if (ctx.graph.degree(v) == 0) {
                result.feasible = false;
                return result;
            }
        }
    }

    const std::size_t np = ctx.lay.pairs.size();
    std::uint64_t n_outer = 1;
    for (const auto& opts_p : ctx.outer) {
        n_outer *= opts_p.size();
        if (n_outer > (1ULL << 40)) {
            throw UnsupportedError("boundary enumeration too large for this model");
        }
    }

    auto decode = [&](std::uint64_t r, std::vector<const PairBoundary*>& choice) {
        for (std::size_t p = 0; p < np; ++p) {
            const auto& options = ctx.outer[p];
            choice[p] = &options[r % options.size()];
            r /= options.size();
        }
    };

    Best best;
    std::uint64_t evaluated = 0;
    std::atomic<std::size_t> shared_bound{SIZE_MAX};

#ifdef _OPENMP
    if (opts.jobs > 1) {
        std::vector<Best> bests;
        std::uint64_t eval_total = 0;
#pragma omp parallel num_threads(opts.jobs) reduction(+ : eval_total)
        {
            Memo memo;
            Best local;
            std::vector<const PairBoundary*> choice(np);
            std::uint64_t local_eval = 0;
#pragma omp for schedule(dynamic, 8)
            for (std::int64_t r = 0; r < static_cast<std::int64_t>(n_outer); ++r) {
                decode(static_cast<std::uint64_t>(r), choice);
                walk_candidates_for_outer(ctx, memo, choice, &shared_bound, local, local_eval);
            }
            eval_total += local_eval;
#pragma omp critical
            bests.push_back(local);
        }
        for (const Best& b : bests) best.merge(b);
        evaluated = eval_total;
    } else
#endif
    {
        Memo memo;
        std::vector<const PairBoundary*> choice(np);
        for (std::uint64_t r = 0; r < n_outer; ++r) {
            decode(r, choice);
            walk_candidates_for_outer(ctx, memo, choice, nullptr, best, evaluated);
        }
    }

    result.candidates = evaluated;
    if (!best.found) {
        throw std::logic_error("polygon solver exhausted all candidates without a solution");
    }
    result.chords = best.chords;
    return result;
}

}  // namespace

SolveResult solve_min_pds_polygon(const ChordModel& model, const SolveOptions& opts) {
    return solve_polygon(model, opts, /*paired=*/true);
}

SolveResult solve_min_ds_polygon(const ChordModel& model, const SolveOptions& opts) {
    return solve_polygon(model, opts, /*paired=*/false);
}

}  // namespace polydom
