#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polydom/digraph.hpp"
#include "polydom/graph.hpp"
#include "polydom/model.hpp"

namespace polydom {

enum class ChordType { L, C, R, E, F, Fp, A, Ap, B, Bp };

// Typed chord identity: `sub` is the vertex subscript (1-based), `sup` the
// superscript. Type E carries the edge (sub, head).
struct ChordName {
    ChordType type{};
    int sub = 0;
    int head = 0;
    int sup = 0;

    auto key() const { return std::tuple(static_cast<int>(type), sub, head, sup); }
    bool operator<(const ChordName& o) const { return key() < o.key(); }
    bool operator==(const ChordName& o) const { return key() == o.key(); }
};

std::string format_chord_name(const ChordName& name);

struct ValidationReport {
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

// The circle model built from a digraph, with the typed-chord name table.
class ReductionArtifact {
  public:
    ReductionArtifact(Digraph source, ChordModel model, std::vector<ChordName> names);

    const Digraph& source() const { return source_; }
    const ChordModel& model() const { return model_; }
    const UndirectedGraph& graph() const { return graph_; }

    int chord_count() const { return model_.chord_count(); }
    const ChordName& name_of(int id) const { return names_[id]; }
    std::optional<int> id_of(const ChordName& name) const;
    std::optional<int> id_of(ChordType t, int sub, int sup = 0, int head = 0) const;
    const std::vector<ChordName>& names() const { return names_; }

    // 2n^2 + 2n - 2, the paired-dominating-set size the construction targets.
    int target_size() const;

  private:
    Digraph source_;
    ChordModel model_;
    UndirectedGraph graph_;
    std::vector<ChordName> names_;
    std::map<std::tuple<int, int, int, int>, int> index_;
};

// Materializes the construction for a digraph with designated start vertex 0
// and end vertex n-1. Requires n >= 2.
ReductionArtifact build_reduction(const Digraph& d);

// Structural adjacency contract of the construction; all violations are
// reported with chord names.
ValidationReport validate_reduction(const ReductionArtifact& art);

// Converts a Hamiltonian path (0-based vertices, path[0] = 0,
// path[n-1] = n-1) into a paired-dominating set of target size.
std::vector<int> pds_from_ham_path(const ReductionArtifact& art, const std::vector<int>& path);

// Recovers a Hamiltonian path from a target-size paired-dominating set via a
// perfect matching of the induced subgraph. Throws WitnessError with reason
// "not a target-size PDS" or "extraction failed".
std::vector<int> ham_path_from_pds(const ReductionArtifact& art, const std::vector<int>& d);

struct WitnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sidecar name-table format: one `<name> <id>` line per chord, 1-based ids.
std::string serialize_name_table(const ReductionArtifact& art);

}  // namespace polydom
