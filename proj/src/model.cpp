#include "polydom/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "polydom/errors.hpp"
#include "polydom/rng.hpp"

namespace polydom {

ChordModel ChordModel::create(std::vector<Chord> chords,
                              std::optional<std::vector<int>> side_sizes) {
    ChordModel m;
    const int n_pos = 2 * static_cast<int>(chords.size());
    m.pos_owner_.assign(n_pos + 1, -1);
    for (int id = 0; id < static_cast<int>(chords.size()); ++id) {
        const Chord& c = chords[id];
        if (c.p < 1 || c.q < 1 || c.p > n_pos || c.q > n_pos)
            throw ModelError("endpoint out of range for chord " + std::to_string(id + 1));
        if (c.p >= c.q)
            throw ModelError("chord endpoints must satisfy p < q (chord " +
                             std::to_string(id + 1) + ")");
        for (int pos : {c.p, c.q}) {
            if (m.pos_owner_[pos] != -1) throw ModelError("duplicate endpoint " + std::to_string(pos));
            m.pos_owner_[pos] = id;
        }
    }
    // every position belongs to exactly one chord
    for (int pos = 1; pos <= n_pos; ++pos) {
        if (m.pos_owner_[pos] == -1) throw ModelError("position " + std::to_string(pos) + " unused");
    }
    m.chords_ = std::move(chords);

    if (side_sizes) {
        const auto& sizes = *side_sizes;
        if (sizes.size() < 3) throw ModelError("polygon model needs k >= 3 sides");
        int total = 0;
        for (int s : sizes) {
            if (s < 0) throw ModelError("negative side size");
            total += s;
        }
        if (total != n_pos) throw ModelError("side sizes must sum to 2m");
        m.side_of_pos_.assign(n_pos + 1, -1);
        m.side_begin_.assign(sizes.size(), 0);
        int pos = 1;
        for (int side = 0; side < static_cast<int>(sizes.size()); ++side) {
            m.side_begin_[side] = pos;
            for (int t = 0; t < sizes[side]; ++t) m.side_of_pos_[pos++] = side;
        }
        for (const Chord& c : m.chords_) {
            if (m.side_of_pos_[c.p] == m.side_of_pos_[c.q])
                throw ModelError("chord endpoints on same side");
        }
        m.side_sizes_ = sizes;
    }
    return m;
}

int ChordModel::endpoint_on_side(int id, int side) const {
    const Chord& c = chords_[id];
    if (side_of_pos_[c.p] == side) return c.p;
    if (side_of_pos_[c.q] == side) return c.q;
    throw ModelError("chord does not touch the requested side");
}

bool chords_intersect(const Chord& c1, const Chord& c2) {
    if (c1.p == c2.p || c1.p == c2.q || c1.q == c2.p || c1.q == c2.q)
        throw ModelError("chords share an endpoint");
    const bool p_inside = c1.p < c2.p && c2.p < c1.q;
    const bool q_inside = c1.p < c2.q && c2.q < c1.q;
    return p_inside != q_inside;
}

UndirectedGraph build_adjacency(const ChordModel& model) {
    const int m = model.chord_count();
    UndirectedGraph g(m);
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            if (chords_intersect(model.chord(a), model.chord(b))) g.add_edge(a, b);
        }
    }
    return g;
}

std::vector<PairRestriction> pair_restrictions(const ChordModel& model) {
    if (!model.has_sides())
        throw UnsupportedError("pair_restrictions requires a polygon model");
    std::map<std::pair<int, int>, std::vector<int>> buckets;
    for (int id = 0; id < model.chord_count(); ++id) {
        int a = model.side_of(model.chord(id).p);
        int b = model.side_of(model.chord(id).q);
        if (a > b) std::swap(a, b);
        buckets[{a, b}].push_back(id);
    }
    std::vector<PairRestriction> out;
    out.reserve(buckets.size());
    for (auto& [key, ids] : buckets) {
        out.push_back(PairRestriction{key.first, key.second, std::move(ids)});
    }
    return out;
}

ChordModel random_polygon_model(int k, int m, std::uint64_t seed) {
    if (k < 3) throw UnsupportedError("random_polygon_model needs k >= 3");
    if (m < 1) throw UnsupportedError("random_polygon_model needs m >= 1");
    Rng rng(seed);
    // Pick two distinct sides per chord, then lay endpoints out side by side
    // with a per-side shuffle. Every chord spans distinct sides by
    // construction, so the polygon invariant always holds.
    std::vector<std::pair<int, int>> span(m);
    for (auto& [a, b] : span) {
        a = static_cast<int>(rng.bounded(k));
        do {
            b = static_cast<int>(rng.bounded(k));
        } while (b == a);
        if (a > b) std::swap(a, b);
    }
    std::vector<std::vector<int>> on_side(k);  // chord ids, one entry per endpoint
    for (int id = 0; id < m; ++id) {
        on_side[span[id].first].push_back(id);
        on_side[span[id].second].push_back(id);
    }
    std::vector<Chord> chords(m);
    std::vector<int> sizes(k);
    int pos = 1;
    for (int side = 0; side < k; ++side) {
        rng.shuffle(on_side[side]);
        sizes[side] = static_cast<int>(on_side[side].size());
        for (int id : on_side[side]) {
            if (chords[id].p == 0)
                chords[id].p = pos++;
            else
                chords[id].q = pos++;
        }
    }
    return ChordModel::create(std::move(chords), sizes);
}

}  // namespace polydom
