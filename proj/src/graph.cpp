#include "polydom/graph.hpp"

#include <stdexcept>

namespace polydom {

void UndirectedGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop rejected");
    adj_[u].set(v);
    adj_[v].set(u);
}

Bitset UndirectedGraph::closed_neighborhood(int v) const {
    Bitset out = adj_[v];
    out.set(v);
    return out;
}

Bitset UndirectedGraph::closed_neighborhood(const Bitset& s) const {
    Bitset out = s;
    for (std::size_t v = s.find_first(); v != Bitset::npos; v = s.find_next(v)) {
        out |= adj_[v];
    }
    return out;
}

std::size_t UndirectedGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

std::vector<std::pair<int, int>> UndirectedGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u) {
        for (std::size_t v = adj_[u].find_next(u); v != Bitset::npos; v = adj_[u].find_next(v)) {
            out.emplace_back(u, static_cast<int>(v));
        }
    }
    return out;
}

UndirectedGraph UndirectedGraph::induced(const Bitset& keep, std::vector<int>* back) const {
    std::vector<int> map;
    for (std::size_t v = keep.find_first(); v != Bitset::npos; v = keep.find_next(v)) {
        map.push_back(static_cast<int>(v));
    }
    UndirectedGraph g(static_cast<int>(map.size()));
    for (int i = 0; i < g.size(); ++i) {
        for (int j = i + 1; j < g.size(); ++j) {
            if (adjacent(map[i], map[j])) g.add_edge(i, j);
        }
    }
    if (back) *back = std::move(map);
    return g;
}

Bitset UndirectedGraph::full_set() const {
    Bitset s(size());
    s.set();
    return s;
}

}  // namespace polydom
