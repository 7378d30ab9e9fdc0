#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polydom/graph.hpp"
#include "polydom/model.hpp"

namespace polydom {

// Disjoint vertex pairs, each an edge of the graph it was computed on.
// Normalized: u < v within a pair, pairs sorted.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    int size() const { return static_cast<int>(pairs.size()); }
    bool covers(const Bitset& subset) const;
};

// Maximum-cardinality matching on a general graph (blossom contraction).
// Deterministic for a fixed input.
Matching max_matching(const UndirectedGraph& g);

// True iff the subgraph induced on `subset` has a matching covering it.
bool has_perfect_matching(const UndirectedGraph& g, const Bitset& subset);
bool has_perfect_matching(const UndirectedGraph& g, const std::vector<int>& subset);

// A perfect matching of the subgraph induced on `subset` (pairs in original
// vertex ids), or nullopt.
std::optional<Matching> perfect_matching_of(const UndirectedGraph& g, const Bitset& subset);

// Minimum chord set disjoint from `s` whose addition makes the induced
// subgraph on the union perfectly matchable; nullopt when impossible.
// Ties break to the lexicographically smallest sorted id sequence.
// Chords listed in `banned` are never used.
std::optional<std::vector<int>> min_augmentation(const UndirectedGraph& g,
                                                 const std::vector<int>& s,
                                                 const std::vector<int>& banned = {});
std::optional<std::vector<int>> min_augmentation(const ChordModel& model,
                                                 const std::vector<int>& s);

}  // namespace polydom
