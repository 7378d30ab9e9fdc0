#pragma once

#include <optional>
#include <vector>

#include "polydom/digraph.hpp"
#include "polydom/graph.hpp"

namespace polydom {

struct OracleOptions {
    int cap = 24;        // max vertices for subset enumeration
    int ham_cap = 12;    // max vertices for Hamiltonian path search
    int jobs = 1;        // >1 enables the OpenMP enumeration kernel
};

bool is_dominating_set(const UndirectedGraph& g, const std::vector<int>& d);
bool is_dominating_set(const UndirectedGraph& g, const Bitset& d);

// Dominating and the induced subgraph has a perfect matching.
bool is_paired_dominating_set(const UndirectedGraph& g, const std::vector<int>& d);
bool is_paired_dominating_set(const UndirectedGraph& g, const Bitset& d);

// Exhaustive minimum dominating set: smallest cardinality, then
// lexicographically smallest id sequence. Enumeration may run on several
// threads; the answer is canonical either way.
std::vector<int> min_dominating_set_bruteforce(const UndirectedGraph& g,
                                               const OracleOptions& opts = {});

// As above for paired domination. nullopt iff the graph has an isolated
// vertex (no paired-dominating set exists).
std::optional<std::vector<int>> min_paired_dominating_set_bruteforce(
    const UndirectedGraph& g, const OracleOptions& opts = {});

// Lexicographically first Hamiltonian path from vertex 0 to vertex n-1 found
// by ordered DFS, or nullopt.
std::optional<std::vector<int>> hamiltonian_path(const Digraph& d,
                                                 const OracleOptions& opts = {});

// True iff `path` visits every vertex exactly once from 0 to n-1 along edges.
bool is_hamiltonian_path(const Digraph& d, const std::vector<int>& path);

}  // namespace polydom
