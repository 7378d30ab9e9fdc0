#pragma once

#include <boost/dynamic_bitset.hpp>
#include <string>
#include <utility>
#include <vector>

namespace polydom {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Simple undirected graph over vertices 0..n-1 with bitset adjacency.
// Self-loops are rejected; adjacency is kept symmetric.
class UndirectedGraph {
  public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int n) : adj_(static_cast<std::size_t>(n), Bitset(n)) {}

    int size() const { return static_cast<int>(adj_.size()); }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return adj_[u].test(v); }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].count()); }

    Bitset closed_neighborhood(int v) const;
    // Union of closed neighborhoods over the set bits of `s`.
    Bitset closed_neighborhood(const Bitset& s) const;

    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    // Subgraph induced on the set bits of `keep`; vertex i of the result is
    // the i-th set bit. `back` (optional) receives result-index -> original.
    UndirectedGraph induced(const Bitset& keep, std::vector<int>* back = nullptr) const;

    Bitset full_set() const;

    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
    const std::vector<std::string>& labels() const { return labels_; }

  private:
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
};

}  // namespace polydom
