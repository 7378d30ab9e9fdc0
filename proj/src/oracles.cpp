#include "polydom/oracles.hpp"

#include <atomic>
#include <cstdint>

#include "polydom/combinatorics.hpp"
#include "polydom/errors.hpp"
#include "polydom/matching.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polydom {

bool is_dominating_set(const UndirectedGraph& g, const Bitset& d) {
    Bitset covered = g.closed_neighborhood(d);
    return covered.count() == static_cast<std::size_t>(g.size());
}

bool is_dominating_set(const UndirectedGraph& g, const std::vector<int>& d) {
    Bitset bits(g.size());
    for (int v : d) bits.set(v);
    return is_dominating_set(g, bits);
}

bool is_paired_dominating_set(const UndirectedGraph& g, const Bitset& d) {
    return is_dominating_set(g, d) && has_perfect_matching(g, d);
}

bool is_paired_dominating_set(const UndirectedGraph& g, const std::vector<int>& d) {
    Bitset bits(g.size());
    for (int v : d) bits.set(v);
    return is_paired_dominating_set(g, bits);
}

namespace {

std::vector<std::uint64_t> closed_neighborhood_masks(const UndirectedGraph& g) {
    std::vector<std::uint64_t> nbr(g.size());
    for (int v = 0; v < g.size(); ++v) {
        std::uint64_t m = 1ULL << v;
        const Bitset& row = g.neighbors(v);
        for (std::size_t u = row.find_first(); u != Bitset::npos; u = row.find_next(u)) {
            m |= 1ULL << u;
        }
        nbr[v] = m;
    }
    return nbr;
}

void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
    std::uint64_t cur = target.load(std::memory_order_relaxed);
    while (value < cur && !target.compare_exchange_weak(cur, value)) {
    }
}

// Lexicographically first t-subset of {0..n-1} satisfying pred, scanning in
// rank order. With jobs > 1 the rank space is chunked across threads; the
// reduction keeps the minimum hit rank, so the answer matches the serial scan.
template <typename Pred>
std::optional<std::vector<int>> first_subset_of_size(int n, int t, int jobs, Pred&& pred) {
    const std::uint64_t total = binomial(n, t);
    if (total == 0) return std::nullopt;

#ifdef _OPENMP
    if (jobs > 1 && total > 4096) {
        std::atomic<std::uint64_t> best{UINT64_MAX};
        const std::uint64_t chunk = std::max<std::uint64_t>(1024, total / (16 * jobs) + 1);
        const std::uint64_t nchunks = (total + chunk - 1) / chunk;
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c) {
            const std::uint64_t lo = static_cast<std::uint64_t>(c) * chunk;
            const std::uint64_t hi = std::min(total, lo + chunk);
            if (lo >= best.load(std::memory_order_relaxed)) continue;
            std::vector<int> idx = unrank_combination(n, t, lo);
            for (std::uint64_t r = lo; r < hi; ++r) {
                if (r >= best.load(std::memory_order_relaxed)) break;
                if (pred(idx)) {
                    atomic_min(best, r);
                    break;
                }
                if (!next_combination(idx, n)) break;
            }
        }
        const std::uint64_t hit = best.load();
        if (hit == UINT64_MAX) return std::nullopt;
        return unrank_combination(n, t, hit);
    }
#else
    (void)jobs;
#endif

    std::optional<std::vector<int>> out;
    for_each_combination(n, t, [&](const std::vector<int>& idx) {
        if (pred(idx)) {
            out = idx;
            return false;
        }
        return true;
    });
    return out;
}

void check_cap(const UndirectedGraph& g, const OracleOptions& opts) {
    if (g.size() > opts.cap) {
        throw UnsupportedError("oracle cap exceeded: " + std::to_string(g.size()) +
                               " vertices > cap " + std::to_string(opts.cap));
    }
    if (opts.cap > 62) throw UnsupportedError("oracle cap above 62 is not supported");
}

}  // namespace

std::vector<int> min_dominating_set_bruteforce(const UndirectedGraph& g,
                                               const OracleOptions& opts) {
    check_cap(g, opts);
    const int n = g.size();
    if (n == 0) return {};
    const auto nbr = closed_neighborhood_masks(g);
    const std::uint64_t full = (n == 64) ? ~0ULL : (1ULL << n) - 1;
    for (int t = 1; t <= n; ++t) {
        auto hit = first_subset_of_size(n, t, opts.jobs, [&](const std::vector<int>& idx) {
            std::uint64_t covered = 0;
            for (int v : idx) covered |= nbr[v];
            return covered == full;
        });
        if (hit) return *hit;
    }
    return {};  // unreachable: d = V always dominates
}

std::optional<std::vector<int>> min_paired_dominating_set_bruteforce(
    const UndirectedGraph& g, const OracleOptions& opts) {
    check_cap(g, opts);
    const int n = g.size();
    if (n == 0) return std::vector<int>{};
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) return std::nullopt;  // isolated vertex: no pairing possible
    }
    const auto nbr = closed_neighborhood_masks(g);
    const std::uint64_t full = (n == 64) ? ~0ULL : (1ULL << n) - 1;
    for (int t = 2; t <= n; t += 2) {
        auto hit = first_subset_of_size(n, t, opts.jobs, [&](const std::vector<int>& idx) {
            std::uint64_t covered = 0;
            for (int v : idx) covered |= nbr[v];
            if (covered != full) return false;
            Bitset subset(n);
            for (int v : idx) subset.set(v);
            return has_perfect_matching(g, subset);
        });
        if (hit) return hit;
    }
    return std::nullopt;  // unreachable for isolate-free graphs
}

namespace {

bool ham_dfs(const Digraph& d, int v, int depth, std::vector<bool>& used, std::vector<int>& path) {
    const int n = d.size();
    if (depth == n) return v == n - 1;
    for (int to : d.successors(v)) {
        if (used[to]) continue;
        if (to == n - 1 && depth != n - 1) continue;  // the end vertex must come last
        used[to] = true;
        path.push_back(to);
        if (ham_dfs(d, to, depth + 1, used, path)) return true;
        path.pop_back();
        used[to] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> hamiltonian_path(const Digraph& d, const OracleOptions& opts) {
    const int n = d.size();
    if (n > opts.ham_cap) {
        throw UnsupportedError("hamiltonian path cap exceeded: " + std::to_string(n) +
                               " vertices > cap " + std::to_string(opts.ham_cap));
    }
    if (n == 1) return std::vector<int>{0};
    std::vector<bool> used(n, false);
    std::vector<int> path{0};
    used[0] = true;
    if (ham_dfs(d, 0, 1, used, path)) return path;
    return std::nullopt;
}

bool is_hamiltonian_path(const Digraph& d, const std::vector<int>& path) {
    const int n = d.size();
    if (static_cast<int>(path.size()) != n) return false;
    if (path.front() != 0 || path.back() != n - 1) return false;
    std::vector<bool> seen(n, false);
    for (int v : path) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (!d.has_edge(path[i], path[i + 1])) return false;
    }
    return true;
}

}  // namespace polydom
