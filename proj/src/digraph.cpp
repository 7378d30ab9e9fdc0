#include "polydom/digraph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "polydom/errors.hpp"
#include "polydom/io_util.hpp"
#include "polydom/rng.hpp"

namespace polydom {

Digraph::Digraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw ModelError("negative vertex count");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw ModelError("edge endpoint out of range");
        if (u == v) throw ModelError("self-loop rejected");
    }
    edges_ = std::move(edges);
    out_.assign(n, {});
    for (auto [u, v] : edges_) out_[u].push_back(v);
}

bool Digraph::has_edge(int u, int v) const {
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

Digraph parse_digraph(std::istream& in) {
    LineReader lr(in);
    auto [header, hline] = lr.next("header");
    if (header != "digraph v1") throw ParseError(hline, "expected header `digraph v1`");
    auto [nm_line, nmline] = lr.next("`n m` line");
    std::istringstream ss(nm_line);
    int n = 0, m = 0;
    if (!(ss >> n >> m) || !lr.at_end(ss)) throw ParseError(nmline, "expected `n m`");
    if (n < 1) throw ParseError(nmline, "vertex count must be positive");
    if (m < 0) throw ParseError(nmline, "negative edge count");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        auto [line, ln] = lr.next("edge line");
        std::istringstream es(line);
        int u = 0, v = 0;
        if (!(es >> u >> v) || !lr.at_end(es)) throw ParseError(ln, "expected two integers `u v`");
        if (u < 1 || v < 1 || u > n || v > n) throw ParseError(ln, "vertex out of range");
        if (u == v) throw ParseError(ln, "self-loop rejected");
        edges.emplace_back(u - 1, v - 1);
    }
    lr.expect_eof();
    return Digraph(n, std::move(edges));
}

Digraph parse_digraph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

std::string serialize_digraph(const Digraph& g) {
    std::ostringstream out;
    out << "digraph v1\n" << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Digraph random_digraph(int n, double edge_prob, std::uint64_t seed) {
    if (n < 1) throw UnsupportedError("random_digraph needs n >= 1");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v && rng.chance(edge_prob)) edges.emplace_back(u, v);
        }
    }
    return Digraph(n, std::move(edges));
}

}  // namespace polydom
