#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "polydom/matching.hpp"
#include "polydom/model.hpp"

namespace polydom {

// Boundary chords designated for one side pair. Roles:
//   Adjacent outer:  roles[0] = leftmost on the corner's first side,
//                    roles[1] = rightmost on the second side.
//   Adjacent inner:  roles[0] = rightmost on the first side,
//                    roles[1] = leftmost on the second side.
//   Four (non-adjacent {i,j}): roles = {leftmost_i, rightmost_i,
//                    leftmost_j, rightmost_j}.
struct PairBoundary {
    enum class Kind { Empty, Adjacent, Four };
    Kind kind = Kind::Empty;
    std::array<int, 4> roles{-1, -1, -1, -1};
    std::vector<int> set;  // sorted unique chord ids

    bool empty() const { return kind == Kind::Empty; }
};

// One entry per pair_restrictions() entry, in the same order.
struct BoundarySelection {
    std::vector<PairBoundary> per_pair;
    std::vector<int> all;  // sorted union over pairs

    void rebuild_union();
};

// Undominated chords of one side pair plus their interval characterization:
// extreme undominated endpoints per side, [lo_a, hi_a, lo_b, hi_b], where
// side a is the corner's first side for adjacent pairs (side_i otherwise).
// A pair chord belongs to the region iff both endpoints lie inside their
// side's range; for adjacent pairs interval[0] and interval[3] delimit the
// wrap-around corner interval.
struct PairRegion {
    std::vector<int> chords;  // sorted
    bool adjacent = false;
    bool has_interval = false;
    std::array<int, 4> interval{0, 0, 0, 0};
};

struct RegionReport {
    std::vector<PairRegion> per_pair;
    std::vector<int> all;  // sorted union
};

// Per-pair extremes of d (outer boundary). O_ij is empty iff d has no chord
// on the pair.
BoundarySelection outer_boundary_of(const ChordModel& model, const std::vector<int>& d);

// J' = J - N[O], by a single scan of the chords against the boundary.
RegionReport undominated_after_outer(const ChordModel& model, const BoundarySelection& o);

// Per-pair extremes of (d minus same-pair matched chords) union the outer
// boundary. `matching` must be a perfect matching of the subgraph induced on
// d. I_ij is empty whenever J'_ij is empty.
BoundarySelection inner_boundary_of(const ChordModel& model, const std::vector<int>& d,
                                    const Matching& matching, const BoundarySelection& o);

// J'' = J - N[O u I].
RegionReport undominated_after_boundaries(const ChordModel& model, const BoundarySelection& o,
                                          const BoundarySelection& i);

// Every (O, I) candidate consistent with the per-pair shape rules, the
// extreme-role consistency filters, and the pruning rule, in deterministic
// order. Inner selections follow the J' regions the outer choice induces.
void enumerate_boundaries(const ChordModel& model,
                          const std::function<void(const BoundarySelection&,
                                                   const BoundarySelection&)>& yield);
std::uint64_t count_boundaries(const ChordModel& model);

// Minimum D'' within the pair, avoiding `excluded`, such that target is
// inside N[D''] and (paired variant) the induced subgraph on D'' has a
// perfect matching. nullopt when no such set exists. Exhaustive below
// `threshold` pool chords; larger pools are unsupported.
std::optional<std::vector<int>> min_constrained_paired_dom_on_pair(
    const ChordModel& model, const PairRestriction& pair, const std::vector<int>& target,
    const std::vector<int>& excluded, int threshold = 16);
std::optional<std::vector<int>> min_constrained_dom_on_pair(
    const ChordModel& model, const PairRestriction& pair, const std::vector<int>& target,
    const std::vector<int>& excluded = {}, int threshold = 16);

struct SolveOptions {
    int jobs = 1;              // >1 evaluates boundary candidates with OpenMP
    int subsolver_threshold = 16;
};

struct SolveResult {
    bool feasible = true;
    std::vector<int> chords;          // sorted ids; empty when infeasible
    std::uint64_t candidates = 0;     // candidates evaluated by the search
};

// Minimum paired-dominating set of a polygon model; infeasible iff some
// chord crosses nothing. Output is canonical (smallest size, then smallest
// id sequence) and independent of the evaluation schedule.
SolveResult solve_min_pds_polygon(const ChordModel& model, const SolveOptions& opts = {});

// Minimum dominating set of a polygon model.
SolveResult solve_min_ds_polygon(const ChordModel& model, const SolveOptions& opts = {});

}  // namespace polydom
