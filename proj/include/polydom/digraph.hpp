#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace polydom {

// Directed graph on vertices 0..n-1. By convention vertex 0 is the designated
// start and vertex n-1 the designated end (v_1 and v_n in 1-based terms).
class Digraph {
  public:
    Digraph() = default;
    Digraph(int n, std::vector<std::pair<int, int>> edges);

    int size() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& successors(int v) const { return out_[v]; }
    bool has_edge(int u, int v) const;

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;   // sorted, deduplicated
    std::vector<std::vector<int>> out_;        // ascending successor lists
};

// "digraph v1" file format; vertices 1-based on disk.
Digraph parse_digraph(std::istream& in);
Digraph parse_digraph_string(const std::string& text);
std::string serialize_digraph(const Digraph& g);

Digraph random_digraph(int n, double edge_prob, std::uint64_t seed);

}  // namespace polydom
