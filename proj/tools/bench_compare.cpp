// Compares the serial reference paths against the OpenMP kernels on the two
// enumeration-heavy workloads: boundary-candidate evaluation in the polygon
// solver and subset enumeration in the brute-force oracles. Results must be
// identical; only the wall time may differ.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <tuple>
#include <vector>

#include "polydom/model.hpp"
#include "polydom/oracles.hpp"
#include "polydom/polygon.hpp"
#include "polydom/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace polydom;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

UndirectedGraph random_graph(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    UndirectedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) g.add_edge(u, v);
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    int threads = 2;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    if (argc > 1) threads = std::atoi(argv[1]);

    std::printf("serial reference vs OpenMP (%d threads)\n\n", threads);
    std::printf("%-34s %12s %12s %8s\n", "workload", "serial ms", "parallel ms", "speedup");

    for (auto [k, m, seed] : std::vector<std::tuple<int, int, std::uint64_t>>{
             {3, 13, 11}, {4, 14, 7}, {5, 15, 3}}) {
        ChordModel model = random_polygon_model(k, m, seed);
        SolveOptions serial;
        SolveOptions par;
        par.jobs = threads;
        SolveResult rs, rp;
        double ts = time_ms([&] { rs = solve_min_pds_polygon(model, serial); });
        double tp = time_ms([&] { rp = solve_min_pds_polygon(model, par); });
        if (rs.chords != rp.chords || rs.feasible != rp.feasible) {
            std::fprintf(stderr, "MISMATCH between serial and parallel solver results\n");
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof(label), "pds polygon k=%d m=%d", k, m);
        std::printf("%-34s %12.1f %12.1f %7.2fx\n", label, ts, tp, ts / tp);
    }

    for (auto [n, p, seed] : std::vector<std::tuple<int, double, std::uint64_t>>{
             {20, 0.16, 5}, {22, 0.14, 9}}) {
        UndirectedGraph g = random_graph(n, p, seed);
        OracleOptions serial;
        serial.cap = 32;
        OracleOptions par = serial;
        par.jobs = threads;
        std::vector<int> a, b;
        double ts = time_ms([&] { a = min_dominating_set_bruteforce(g, serial); });
        double tp = time_ms([&] { b = min_dominating_set_bruteforce(g, par); });
        if (a != b) {
            std::fprintf(stderr, "MISMATCH between serial and parallel oracle results\n");
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof(label), "min dominating set n=%d", n);
        std::printf("%-34s %12.1f %12.1f %7.2fx\n", label, ts, tp, ts / tp);
    }

    return 0;
}
