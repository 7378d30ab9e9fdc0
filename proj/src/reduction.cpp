#include "polydom/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "polydom/errors.hpp"
#include "polydom/matching.hpp"
#include "polydom/oracles.hpp"

namespace polydom {

std::string format_chord_name(const ChordName& n) {
    std::ostringstream s;
    switch (n.type) {
        case ChordType::L: s << "l_" << n.sub << '^' << n.sup; break;
        case ChordType::C: s << "c_" << n.sub << '^' << n.sup; break;
        case ChordType::R: s << "r_" << n.sub << '^' << n.sup; break;
        case ChordType::E: s << "e_" << n.sub << ',' << n.head << '^' << n.sup; break;
        case ChordType::F: s << "f^" << n.sup; break;
        case ChordType::Fp: s << "f'^" << n.sup; break;
        case ChordType::A: s << "a_" << n.sub; break;
        case ChordType::Ap: s << "a'_" << n.sub; break;
        case ChordType::B: s << "b_" << n.sub << '^' << n.sup; break;
        case ChordType::Bp: s << "b'_" << n.sub << '^' << n.sup; break;
    }
    return s.str();
}

ReductionArtifact::ReductionArtifact(Digraph source, ChordModel model,
                                     std::vector<ChordName> names)
    : source_(std::move(source)),
      model_(std::move(model)),
      graph_(build_adjacency(model_)),
      names_(std::move(names)) {
    for (int id = 0; id < static_cast<int>(names_.size()); ++id) {
        index_.emplace(names_[id].key(), id);
    }
}

std::optional<int> ReductionArtifact::id_of(const ChordName& name) const {
    auto it = index_.find(name.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> ReductionArtifact::id_of(ChordType t, int sub, int sup, int head) const {
    return id_of(ChordName{t, sub, head, sup});
}

int ReductionArtifact::target_size() const {
    const int n = source_.size();
    return 2 * n * n + 2 * n - 2;
}

namespace {

struct Builder {
    const Digraph& d;
    int n;
    std::vector<ChordName> names;
    std::map<std::tuple<int, int, int, int>, int> index;
    std::vector<int> sequence;  // chord id per circular position

    explicit Builder(const Digraph& dg) : d(dg), n(dg.size()) {}

    int declare(ChordName name) {
        int id = static_cast<int>(names.size());
        names.push_back(name);
        index.emplace(name.key(), id);
        return id;
    }

    void emit(ChordType t, int sub, int sup = 0, int head = 0) {
        auto it = index.find(ChordName{t, sub, head, sup}.key());
        if (it == index.end()) {
            throw ModelError("layout error: unknown chord " +
                             format_chord_name(ChordName{t, sub, head, sup}));
        }
        sequence.push_back(it->second);
    }

    void declare_all() {
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= n; ++i)
                if (!(i == 1 && j == 1)) declare({ChordType::L, i, 0, j});
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= n; ++i) declare({ChordType::C, i, 0, j});
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= n; ++i)
                if (!(i == n && j == n)) declare({ChordType::R, i, 0, j});
        for (int j = 1; j <= n; ++j)
            for (auto [x, y] : d.edges()) declare({ChordType::E, x + 1, y + 1, j});
        for (int j = 1; j < n; ++j) declare({ChordType::F, 0, 0, j});
        for (int j = 1; j < n; ++j) declare({ChordType::Fp, 0, 0, j});
        for (int i = 1; i <= n; ++i) declare({ChordType::A, i, 0, 0});
        for (int i = 1; i <= n; ++i) declare({ChordType::Ap, i, 0, 0});
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) declare({ChordType::B, i, 0, j});
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) declare({ChordType::Bp, i, 0, j});
    }

    // Counterclockwise layout. Nested f-chords first, then the cell blocks
    // (block j holds cells (1..n, j)), then the b/a region. Within a cell the
    // slot order makes c cross l and r, keeps l and r apart, lets the b
    // anchor cross only c, and gives e anchors a slot crossing only r.
    void lay_out() {
        for (int j = n - 1; j >= 1; --j) {
            emit(ChordType::Fp, 0, j);
            emit(ChordType::F, 0, j);
            emit(ChordType::Fp, 0, j);
        }
        for (int j = 1; j <= n; ++j) {
            for (int i = 1; i <= n; ++i) {
                const bool has_l = !(i == 1 && j == 1);
                const bool has_r = !(i == n && j == n);
                if (has_l) emit(ChordType::L, i, j);
                if (j >= 2) {
                    for (auto [x, y] : d.edges())
                        if (y + 1 == i) emit(ChordType::E, x + 1, j - 1, y + 1);
                }
                emit(ChordType::C, i, j);
                if (has_l) emit(ChordType::L, i, j);
                emit(ChordType::B, i, j);
                if (has_r) emit(ChordType::R, i, j);
                emit(ChordType::C, i, j);
                for (auto [x, y] : d.edges())
                    if (x + 1 == i) emit(ChordType::E, x + 1, j, y + 1);
                if (has_r) emit(ChordType::R, i, j);
            }
            if (j < n) emit(ChordType::F, 0, j);
            if (j == n - 1) {
                // Far endpoints of the level-n e-chords sit between the last
                // two blocks, past f^{n-1}, crossing b anchors of block n.
                for (auto [x, y] : d.edges()) emit(ChordType::E, x + 1, n, y + 1);
            }
        }
        for (int i = 1; i <= n; ++i) {
            emit(ChordType::Ap, i);
            emit(ChordType::A, i);
            emit(ChordType::Ap, i);
            for (int j = 1; j <= n; ++j) {
                emit(ChordType::Bp, i, j);
                emit(ChordType::B, i, j);
                emit(ChordType::Bp, i, j);
            }
            emit(ChordType::A, i);
        }
    }

    ChordModel to_model() const {
        std::vector<Chord> chords(names.size());
        std::vector<int> seen(names.size(), 0);
        for (int pos = 1; pos <= static_cast<int>(sequence.size()); ++pos) {
            int id = sequence[pos - 1];
            if (seen[id] == 0)
                chords[id].p = pos;
            else
                chords[id].q = pos;
            ++seen[id];
        }
        for (int id = 0; id < static_cast<int>(names.size()); ++id) {
            if (seen[id] != 2)
                throw ModelError("layout error: chord " + format_chord_name(names[id]) +
                                 " has " + std::to_string(seen[id]) + " endpoints");
        }
        return ChordModel::create(std::move(chords));
    }
};

}  // namespace

ReductionArtifact build_reduction(const Digraph& d) {
    if (d.size() < 2) throw UnsupportedError("reduction requires n >= 2");
    Builder b(d);
    b.declare_all();
    b.lay_out();
    ChordModel model = b.to_model();
    return ReductionArtifact(d, std::move(model), std::move(b.names));
}

namespace {

struct Checker {
    const ReductionArtifact& art;
    const UndirectedGraph& g;
    int n;
    std::vector<std::string>& out;

    bool crosses(int a, int b) const { return g.adjacent(a, b); }

    void violation(const std::string& msg) { out.push_back(msg); }

    std::string nm(int id) const { return format_chord_name(art.name_of(id)); }

    void require_cross(int a, int b, bool want) {
        if (crosses(a, b) != want) {
            violation(nm(a) + (want ? " does not intersect " : " intersects ") + nm(b));
        }
    }

    // `allowed` lists the only chords `id` may intersect.
    void require_exact(int id, const std::vector<int>& allowed) {
        Bitset expect(g.size());
        for (int a : allowed) expect.set(a);
        const Bitset& actual = g.neighbors(id);
        if (actual == expect) return;
        Bitset missing = expect & ~actual;
        Bitset extra = actual & ~expect;
        for (std::size_t v = missing.find_first(); v != Bitset::npos; v = missing.find_next(v))
            violation(nm(id) + " does not intersect " + nm(static_cast<int>(v)));
        for (std::size_t v = extra.find_first(); v != Bitset::npos; v = extra.find_next(v))
            violation(nm(id) + " intersects " + nm(static_cast<int>(v)));
    }
};

}  // namespace

ValidationReport validate_reduction(const ReductionArtifact& art) {
    ValidationReport report;
    const Digraph& d = art.source();
    const int n = d.size();
    const int m = d.edge_count();
    Checker ck{art, art.graph(), n, report.violations};

    // Cardinalities first: total and per type.
    const int expect_total = 5 * n * n + 4 * n - 4 + n * m;
    if (art.chord_count() != expect_total) {
        ck.violation("chord count " + std::to_string(art.chord_count()) + " differs from " +
                     std::to_string(expect_total));
    }
    std::map<ChordType, int> counts;
    for (const ChordName& nm : art.names()) counts[nm.type]++;
    auto expect_count = [&](ChordType t, int want, const char* label) {
        if (counts[t] != want) {
            ck.violation(std::string(label) + " count " + std::to_string(counts[t]) +
                         " differs from " + std::to_string(want));
        }
    };
    expect_count(ChordType::L, n * n - 1, "type-l");
    expect_count(ChordType::R, n * n - 1, "type-r");
    expect_count(ChordType::C, n * n, "type-c");
    expect_count(ChordType::E, n * m, "type-e");
    expect_count(ChordType::F, n - 1, "type-f");
    expect_count(ChordType::Fp, n - 1, "type-f'");
    expect_count(ChordType::A, n, "type-a");
    expect_count(ChordType::Ap, n, "type-a'");
    expect_count(ChordType::B, n * n, "type-b");
    expect_count(ChordType::Bp, n * n, "type-b'");
    if (!report.violations.empty()) return report;  // structure checks need the full table

    auto id = [&](ChordType t, int sub, int sup = 0, int head = 0) {
        return art.id_of(t, sub, sup, head);
    };

    // (a) type-l and type-r chords are pairwise non-crossing.
    std::vector<int> lr;
    for (int c = 0; c < art.chord_count(); ++c) {
        ChordType t = art.name_of(c).type;
        if (t == ChordType::L || t == ChordType::R) lr.push_back(c);
    }
    for (std::size_t i = 0; i < lr.size(); ++i)
        for (std::size_t j = i + 1; j < lr.size(); ++j) ck.require_cross(lr[i], lr[j], false);

    // (b) c_i^j crosses its own l and r.
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n; ++i) {
            int c = *id(ChordType::C, i, j);
            if (auto l = id(ChordType::L, i, j)) ck.require_cross(c, *l, true);
            if (auto r = id(ChordType::R, i, j)) ck.require_cross(c, *r, true);
        }
    }

    // (c) e_{x,y}^j crosses r_x^j, and for j < n also l_y^{j+1} and f^j.
    for (auto [x0, y0] : d.edges()) {
        const int x = x0 + 1, y = y0 + 1;
        for (int j = 1; j <= n; ++j) {
            int e = *id(ChordType::E, x, j, y);
            if (auto r = id(ChordType::R, x, j)) ck.require_cross(e, *r, true);
            if (j < n) {
                ck.require_cross(e, *id(ChordType::L, y, j + 1), true);
                ck.require_cross(e, *id(ChordType::F, 0, j), true);
            }
        }
    }

    // (d) type-f chords are pairwise non-crossing.
    for (int j1 = 1; j1 < n; ++j1)
        for (int j2 = j1 + 1; j2 < n; ++j2)
            ck.require_cross(*id(ChordType::F, 0, j1), *id(ChordType::F, 0, j2), false);

    // (e) f'^j crosses exactly f^j.
    for (int j = 1; j < n; ++j)
        ck.require_exact(*id(ChordType::Fp, 0, j), {*id(ChordType::F, 0, j)});

    // (f) b_i^j crosses c_i^j while avoiding l_i^j and r_i^j.
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int b = *id(ChordType::B, i, j);
            ck.require_cross(b, *id(ChordType::C, i, j), true);
            if (auto l = id(ChordType::L, i, j)) ck.require_cross(b, *l, false);
            if (auto r = id(ChordType::R, i, j)) ck.require_cross(b, *r, false);
        }
    }

    // (g) a_i crosses exactly its b_i^j chords and a'_i.
    for (int i = 1; i <= n; ++i) {
        std::vector<int> allowed;
        for (int j = 1; j <= n; ++j) allowed.push_back(*id(ChordType::B, i, j));
        allowed.push_back(*id(ChordType::Ap, i));
        ck.require_exact(*id(ChordType::A, i), allowed);
    }

    // (h) a'_i crosses exactly a_i; b'_i^j crosses exactly b_i^j.
    for (int i = 1; i <= n; ++i) {
        ck.require_exact(*id(ChordType::Ap, i), {*id(ChordType::A, i)});
        for (int j = 1; j <= n; ++j)
            ck.require_exact(*id(ChordType::Bp, i, j), {*id(ChordType::B, i, j)});
    }

    return report;
}

std::vector<int> pds_from_ham_path(const ReductionArtifact& art, const std::vector<int>& path) {
    const Digraph& d = art.source();
    const int n = d.size();
    if (!is_hamiltonian_path(d, path)) {
        throw WitnessError("invalid witness: not a Hamiltonian path of the source digraph");
    }
    std::vector<int> position(n + 1, 0);  // vertex (1-based) -> path position (1-based)
    for (int t = 0; t < n; ++t) position[path[t] + 1] = t + 1;

    std::vector<int> s;
    for (int c = 0; c < art.chord_count(); ++c) {
        const ChordName& nm = art.name_of(c);
        switch (nm.type) {
            case ChordType::B:
            case ChordType::F:
            case ChordType::A: s.push_back(c); break;
            case ChordType::C:
                if (nm.sup != position[nm.sub]) s.push_back(c);
                break;
            default: break;
        }
    }
    // One e-chord per consecutive path pair, at the level of its position.
    for (int t = 1; t < n; ++t) {
        auto e = art.id_of(ChordType::E, path[t - 1] + 1, t, path[t] + 1);
        if (!e) throw WitnessError("invalid witness: path edge missing from the digraph");
        s.push_back(*e);
    }
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<int> ham_path_from_pds(const ReductionArtifact& art, const std::vector<int>& d) {
    const int n = art.source().size();
    if (static_cast<int>(d.size()) != art.target_size()) {
        throw WitnessError("not a target-size PDS: expected " +
                           std::to_string(art.target_size()) + " chords, got " +
                           std::to_string(d.size()));
    }
    const UndirectedGraph& g = art.graph();
    Bitset bits(g.size());
    for (int c : d) {
        if (c < 0 || c >= g.size()) throw WitnessError("not a target-size PDS: chord id out of range");
        bits.set(c);
    }
    if (!is_dominating_set(g, bits)) {
        throw WitnessError("not a target-size PDS: set is not dominating");
    }
    auto matching = perfect_matching_of(g, bits);
    if (!matching) {
        throw WitnessError("not a target-size PDS: induced subgraph has no perfect matching");
    }
    std::vector<int> partner(g.size(), -1);
    for (auto [u, v] : matching->pairs) {
        partner[u] = v;
        partner[v] = u;
    }
    // p(i) = superscript of the type-b chord matched with a_i.
    std::vector<int> vertex_at(n + 1, 0);  // position -> vertex (1-based)
    for (int i = 1; i <= n; ++i) {
        auto a = art.id_of(ChordType::A, i);
        if (!a || partner[*a] == -1) throw WitnessError("extraction failed: a-chord unmatched");
        const ChordName& mate = art.name_of(partner[*a]);
        if (mate.type != ChordType::B || mate.sub != i) {
            throw WitnessError("extraction failed: " + format_chord_name(art.name_of(*a)) +
                               " matched with " + format_chord_name(mate));
        }
        if (mate.sup < 1 || mate.sup > n || vertex_at[mate.sup] != 0) {
            throw WitnessError("extraction failed: extraction map is not a bijection");
        }
        vertex_at[mate.sup] = i;
    }
    std::vector<int> path(n);
    for (int t = 1; t <= n; ++t) path[t - 1] = vertex_at[t] - 1;
    if (!is_hamiltonian_path(art.source(), path)) {
        throw WitnessError("extraction failed: extracted sequence is not a Hamiltonian path");
    }
    return path;
}

std::string serialize_name_table(const ReductionArtifact& art) {
    std::ostringstream out;
    for (int c = 0; c < art.chord_count(); ++c) {
        out << format_chord_name(art.name_of(c)) << ' ' << c + 1 << '\n';
    }
    return out.str();
}

}  // namespace polydom
