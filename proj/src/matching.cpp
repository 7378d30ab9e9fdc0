#include "polydom/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "polydom/combinatorics.hpp"

namespace polydom {

bool Matching::covers(const Bitset& subset) const {
    Bitset seen(subset.size());
    for (auto [u, v] : pairs) {
        seen.set(u);
        seen.set(v);
    }
    return (subset & ~seen).none();
}

namespace {

// Edmonds' blossom algorithm, array form. One BFS per exposed vertex; base[]
// tracks blossom contraction, p[] the alternating forest.
class Blossom {
  public:
    explicit Blossom(const UndirectedGraph& g) : n_(g.size()), adj_(n_) {
        for (int v = 0; v < n_; ++v) {
            const Bitset& row = g.neighbors(v);
            for (std::size_t u = row.find_first(); u != Bitset::npos; u = row.find_next(u)) {
                adj_[v].push_back(static_cast<int>(u));
            }
        }
        match_.assign(n_, -1);
        p_.assign(n_, -1);
        base_.resize(n_);
    }

    std::vector<int> run() {
        // Greedy seed matching keeps the augmentation count down.
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int u : adj_[v]) {
                if (match_[u] == -1) {
                    match_[v] = u;
                    match_[u] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (match_[v] == -1) {
                int leaf = find_path(v);
                if (leaf != -1) augment(leaf);
            }
        }
        return match_;
    }

  private:
    int lca(int a, int b) {
        std::vector<bool> on_path(n_, false);
        for (int v = a;;) {
            v = base_[v];
            on_path[v] = true;
            if (match_[v] == -1) break;
            v = p_[match_[v]];
        }
        for (int v = b;;) {
            v = base_[v];
            if (on_path[v]) return v;
            v = p_[match_[v]];
        }
    }

    void mark_path(int v, int b, int child, std::vector<bool>& in_blossom) {
        while (base_[v] != b) {
            in_blossom[base_[v]] = true;
            in_blossom[base_[match_[v]]] = true;
            p_[v] = child;
            child = match_[v];
            v = p_[match_[v]];
        }
    }

    int find_path(int root) {
        used_.assign(n_, false);
        std::fill(p_.begin(), p_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
                    // Odd cycle: contract the blossom around the common base.
                    int cur_base = lca(v, to);
                    std::vector<bool> in_blossom(n_, false);
                    mark_path(v, cur_base, to, in_blossom);
                    mark_path(to, cur_base, v, in_blossom);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (p_[to] == -1) {
                    p_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = true;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = p_[v];
            int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, p_, base_;
    std::vector<bool> used_;
};

Matching to_matching(const std::vector<int>& match) {
    Matching m;
    for (int v = 0; v < static_cast<int>(match.size()); ++v) {
        if (match[v] > v) m.pairs.emplace_back(v, match[v]);
    }
    return m;
}

}  // namespace

Matching max_matching(const UndirectedGraph& g) {
    Blossom b(g);
    return to_matching(b.run());
}

bool has_perfect_matching(const UndirectedGraph& g, const Bitset& subset) {
    return perfect_matching_of(g, subset).has_value();
}

bool has_perfect_matching(const UndirectedGraph& g, const std::vector<int>& subset) {
    Bitset s(g.size());
    for (int v : subset) s.set(v);
    return has_perfect_matching(g, s);
}

std::optional<Matching> perfect_matching_of(const UndirectedGraph& g, const Bitset& subset) {
    const std::size_t count = subset.count();
    if (count == 0) return Matching{};
    if (count % 2 != 0) return std::nullopt;
    std::vector<int> back;
    UndirectedGraph sub = g.induced(subset, &back);
    // A vertex without neighbors inside the subset can never be covered.
    for (int v = 0; v < sub.size(); ++v) {
        if (sub.degree(v) == 0) return std::nullopt;
    }
    Matching local = max_matching(sub);
    if (2 * local.size() != static_cast<int>(count)) return std::nullopt;
    Matching out;
    out.pairs.reserve(local.pairs.size());
    for (auto [u, v] : local.pairs) {
        int a = back[u], b = back[v];
        out.pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

std::optional<std::vector<int>> min_augmentation(const UndirectedGraph& g,
                                                 const std::vector<int>& s,
                                                 const std::vector<int>& banned) {
    Bitset s_bits(g.size());
    for (int v : s) s_bits.set(v);
    Bitset banned_bits(g.size());
    for (int v : banned) banned_bits.set(v);

    // Every chord of a minimum augmentation is matched to a chord of s, so the
    // candidate pool is the open neighborhood of s.
    Bitset pool_bits = g.closed_neighborhood(s_bits) & ~s_bits & ~banned_bits;
    std::vector<int> pool;
    for (std::size_t v = pool_bits.find_first(); v != Bitset::npos; v = pool_bits.find_next(v)) {
        pool.push_back(static_cast<int>(v));
    }

    UndirectedGraph on_s = g.induced(s_bits);
    const int deficiency = static_cast<int>(s.size()) - 2 * max_matching(on_s).size();
    const int max_size = std::min(static_cast<int>(pool.size()), static_cast<int>(s.size()));
    for (int t = deficiency; t <= max_size; t += 2) {
        std::optional<std::vector<int>> hit;
        for_each_combination(static_cast<int>(pool.size()), t, [&](const std::vector<int>& idx) {
            Bitset candidate = s_bits;
            for (int i : idx) candidate.set(pool[i]);
            if (has_perfect_matching(g, candidate)) {
                std::vector<int> psi;
                psi.reserve(idx.size());
                for (int i : idx) psi.push_back(pool[i]);
                hit = std::move(psi);
                return false;  // first hit in lex order is the canonical answer
            }
            return true;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> min_augmentation(const ChordModel& model,
                                                 const std::vector<int>& s) {
    return min_augmentation(build_adjacency(model), s);
}

}  // namespace polydom
