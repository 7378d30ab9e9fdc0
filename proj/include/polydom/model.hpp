#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polydom/graph.hpp"

namespace polydom {

// A chord joins two endpoint positions on the circle, 1-based, p < q.
struct Chord {
    int p = 0;
    int q = 0;
};

// Positions are abstract integers 1..2m in counterclockwise order; only the
// crossing relation matters. When sides are present the model is a k-polygon
// model: side i covers a contiguous range of positions and every chord joins
// two distinct sides.
class ChordModel {
  public:
    // Validates all invariants; `side_sizes`, when given, lists the number of
    // endpoints per side (k entries, possibly zero, summing to 2m).
    static ChordModel create(std::vector<Chord> chords,
                             std::optional<std::vector<int>> side_sizes = std::nullopt);

    int chord_count() const { return static_cast<int>(chords_.size()); }
    int endpoint_count() const { return 2 * chord_count(); }
    const Chord& chord(int id) const { return chords_[id]; }
    const std::vector<Chord>& chords() const { return chords_; }

    bool has_sides() const { return side_sizes_.has_value(); }
    int side_count() const { return static_cast<int>(side_sizes_->size()); }
    const std::vector<int>& side_sizes() const { return *side_sizes_; }
    // Side index (0-based) owning a position; first position of a side.
    int side_of(int position) const { return side_of_pos_[position]; }
    int side_begin(int side) const { return side_begin_[side]; }
    int side_end(int side) const { return side_begin_[side] + (*side_sizes_)[side]; }

    // Chord owning a position.
    int chord_at(int position) const { return pos_owner_[position]; }
    // Endpoint of `id` lying on `side`; the chord must touch that side.
    int endpoint_on_side(int id, int side) const;

  private:
    std::vector<Chord> chords_;
    std::vector<int> pos_owner_;  // 1-based positions -> chord id
    std::optional<std::vector<int>> side_sizes_;
    std::vector<int> side_of_pos_;  // 1-based positions -> side index
    std::vector<int> side_begin_;
};

// Chords with one endpoint on side_i and one on side_j (i < j).
struct PairRestriction {
    int side_i = 0;
    int side_j = 0;
    std::vector<int> chords;  // sorted by id
    int size() const { return static_cast<int>(chords.size()); }
};

// True iff the chords cross: exactly one endpoint of c2 lies strictly inside
// the arc (c1.p, c1.q). Sharing an endpoint is a model error.
bool chords_intersect(const Chord& c1, const Chord& c2);

// Vertex per chord (in id order), edge iff the chords cross.
UndirectedGraph build_adjacency(const ChordModel& model);

// One entry per unordered side pair with at least one chord, ordered by
// (side_i, side_j). Requires a polygon model.
std::vector<PairRestriction> pair_restrictions(const ChordModel& model);

// Deterministic random polygon model: every chord spans two distinct sides.
ChordModel random_polygon_model(int k, int m, std::uint64_t seed);

// File formats ("poly v1" / "circle v1"); see README. parse_model dispatches
// on the header line. Serialization is canonical and byte-stable.
ChordModel parse_model(std::istream& in);
ChordModel parse_model_string(const std::string& text);
std::string serialize_model(const ChordModel& model);

}  // namespace polydom
