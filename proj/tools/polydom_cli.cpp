// Command-line front end: solve, reduce, witness, validate, gen, bench.
// Exit codes: 0 success, 1 input/usage error, 2 infeasible or verdict failure.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "polydom/errors.hpp"
#include "polydom/matching.hpp"
#include "polydom/model.hpp"
#include "polydom/oracles.hpp"
#include "polydom/polygon.hpp"
#include "polydom/reduction.hpp"
#include "polydom/report.hpp"

using namespace polydom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerdict = 2;

struct GlobalOpts {
    std::string format = "text";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int jobs = 1;
    int oracle_cap = 24;
};

std::string read_file_or_throw(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << bytes;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        int v;
        while (ls >> v) out.push_back(v);
    }
    return out;
}

void emit(const GlobalOpts& g, const RunReport& report) {
    std::cout << (g.format == "json" ? report.to_json() : report.to_text());
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<int> to_external(const std::vector<int>& ids) {
    std::vector<int> out(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) out[i] = ids[i] + 1;
    return out;
}

std::vector<int> to_internal(const std::vector<int>& ids) {
    std::vector<int> out(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) out[i] = ids[i] - 1;
    return out;
}

int cmd_solve(const GlobalOpts& g, const std::string& kind, const std::string& engine,
              const std::string& input, const std::string& argv_echo) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string bytes = read_file_or_throw(input);
    ChordModel model = parse_model_string(bytes);
    UndirectedGraph graph = build_adjacency(model);

    RunReport report;
    report.command = argv_echo;
    report.input_path = input;
    report.input_digest = fnv1a_hex(bytes);
    report.extra["engine"] = engine;
    report.extra["kind"] = kind;

    bool feasible = true;
    std::vector<int> solution;
    if (engine == "polygon") {
        if (!model.has_sides()) {
            throw UnsupportedError("engine polygon requires a poly v1 model");
        }
        SolveOptions opts;
        opts.jobs = g.jobs;
        SolveResult r = kind == "pds" ? solve_min_pds_polygon(model, opts)
                                      : solve_min_ds_polygon(model, opts);
        feasible = r.feasible;
        solution = r.chords;
        report.extra["candidates"] = std::to_string(r.candidates);
    } else {
        OracleOptions opts;
        opts.cap = g.oracle_cap;
        opts.jobs = g.jobs;
        if (kind == "pds") {
            auto r = min_paired_dominating_set_bruteforce(graph, opts);
            feasible = r.has_value();
            if (r) solution = *r;
        } else {
            solution = min_dominating_set_bruteforce(graph, opts);
        }
    }

    report.feasible = feasible;
    if (!feasible) {
        report.duration_ms = ms_since(t0);
        emit(g, report);
        return kExitVerdict;
    }
    const bool ok = kind == "pds" ? is_paired_dominating_set(graph, solution)
                                  : is_dominating_set(graph, solution);
    report.verdicts["checker"] = ok ? "pass" : "fail";
    report.solution = to_external(solution);
    report.duration_ms = ms_since(t0);
    emit(g, report);
    return ok ? kExitOk : kExitVerdict;
}

int cmd_reduce(const GlobalOpts& g, const std::string& input, const std::string& out_path,
               std::string names_path, const std::string& argv_echo) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string bytes = read_file_or_throw(input);
    Digraph d = parse_digraph_string(bytes);
    ReductionArtifact art = build_reduction(d);
    ValidationReport validation = validate_reduction(art);

    if (names_path.empty()) names_path = out_path + ".names";
    write_file(out_path, serialize_model(art.model()));
    write_file(names_path, serialize_name_table(art));

    RunReport report;
    report.command = argv_echo;
    report.input_path = input;
    report.input_digest = fnv1a_hex(bytes);
    report.extra["chords"] = std::to_string(art.chord_count());
    report.extra["target_size"] = std::to_string(art.target_size());
    report.extra["model_out"] = out_path;
    report.extra["names_out"] = names_path;
    report.verdicts["construction"] = validation.pass() ? "pass" : "fail";
    report.duration_ms = ms_since(t0);
    emit(g, report);
    if (!validation.pass()) {
        for (const std::string& v : validation.violations) std::cerr << v << '\n';
        return kExitVerdict;
    }
    return kExitOk;
}

int cmd_witness(const GlobalOpts& g, const std::string& direction, const std::string& digraph_path,
                const std::string& witness_path, const std::string& out_path,
                const std::string& argv_echo) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string bytes = read_file_or_throw(digraph_path);
    Digraph d = parse_digraph_string(bytes);
    ReductionArtifact art = build_reduction(d);

    RunReport report;
    report.command = argv_echo;
    report.input_path = digraph_path;
    report.input_digest = fnv1a_hex(bytes);

    const std::vector<int> witness = parse_int_list(read_file_or_throw(witness_path));
    try {
        if (direction == "to-pds") {
            std::vector<int> path = to_internal(witness);  // 1-based vertices on disk
            std::vector<int> s = pds_from_ham_path(art, path);
            const bool ok = is_paired_dominating_set(art.graph(), s);
            report.verdicts["checker"] = ok ? "pass" : "fail";
            report.solution = to_external(s);
            report.feasible = true;
            if (!out_path.empty()) {
                std::ostringstream body;
                for (int id : *report.solution) body << id << '\n';
                write_file(out_path, body.str());
            }
            report.duration_ms = ms_since(t0);
            emit(g, report);
            return ok ? kExitOk : kExitVerdict;
        }
        // to-path
        std::vector<int> s = to_internal(witness);
        std::vector<int> path = ham_path_from_pds(art, s);
        const bool ok = is_hamiltonian_path(d, path);
        report.verdicts["path"] = ok ? "pass" : "fail";
        report.solution = to_external(path);
        report.feasible = true;
        if (!out_path.empty()) {
            std::ostringstream body;
            for (int v : *report.solution) body << v << '\n';
            write_file(out_path, body.str());
        }
        report.duration_ms = ms_since(t0);
        emit(g, report);
        return ok ? kExitOk : kExitVerdict;
    } catch (const WitnessError& e) {
        report.feasible = false;
        report.verdicts["witness"] = "fail";
        report.extra["reason"] = e.what();
        report.duration_ms = ms_since(t0);
        emit(g, report);
        return kExitVerdict;
    }
}

int cmd_validate(const GlobalOpts& g, const std::string& input, const std::string& digraph_path,
                 const std::string& names_path, const std::string& argv_echo) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string bytes = read_file_or_throw(input);

    RunReport report;
    report.command = argv_echo;
    report.input_path = input;
    report.input_digest = fnv1a_hex(bytes);

    std::istringstream probe(bytes);
    std::string header;
    {
        std::string line;
        while (std::getline(probe, line)) {
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            header = line;
            break;
        }
    }

    bool ok = true;
    if (header == "digraph v1") {
        Digraph d = parse_digraph_string(bytes);
        report.extra["type"] = "digraph";
        report.extra["vertices"] = std::to_string(d.size());
        report.extra["edges"] = std::to_string(d.edge_count());
    } else {
        ChordModel model = parse_model_string(bytes);
        report.extra["type"] = model.has_sides() ? "polygon" : "circle";
        report.extra["chords"] = std::to_string(model.chord_count());
        if (!digraph_path.empty()) {
            const std::string dg_bytes = read_file_or_throw(digraph_path);
            ReductionArtifact art = build_reduction(parse_digraph_string(dg_bytes));
            const bool model_match = serialize_model(art.model()) == bytes;
            report.verdicts["model_match"] = model_match ? "pass" : "fail";
            ok = ok && model_match;
            if (!names_path.empty()) {
                const bool names_match =
                    serialize_name_table(art) == read_file_or_throw(names_path);
                report.verdicts["names_match"] = names_match ? "pass" : "fail";
                ok = ok && names_match;
            }
            ValidationReport validation = validate_reduction(art);
            report.verdicts["construction"] = validation.pass() ? "pass" : "fail";
            ok = ok && validation.pass();
        }
    }
    report.verdicts["parse"] = "pass";
    report.duration_ms = ms_since(t0);
    emit(g, report);
    return ok ? kExitOk : kExitVerdict;
}

int cmd_gen(const GlobalOpts& g, const std::string& kind, int k, int m, int n, double p,
            const std::string& out_path, const std::string& argv_echo) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string body;
    if (kind == "polygon") {
        body = serialize_model(random_polygon_model(k, m, g.seed));
    } else {
        body = serialize_digraph(random_digraph(n, p, g.seed));
    }
    if (out_path.empty()) {
        std::cout << body;
        return kExitOk;
    }
    write_file(out_path, body);
    RunReport report;
    report.command = argv_echo;
    report.input_path = out_path;
    report.input_digest = fnv1a_hex(body);
    report.seed = g.seed;
    report.extra["kind"] = kind;
    report.duration_ms = ms_since(t0);
    emit(g, report);
    return kExitOk;
}

void write_bench_plot(const std::string& path,
                      const std::vector<std::tuple<int, int, std::uint64_t, double>>& rows) {
    // Minimal SVG: one polyline of candidate counts per k, x = chord count.
    std::map<int, std::vector<std::pair<int, double>>> series;
    double max_y = 1.0;
    int max_x = 1;
    for (const auto& [k, m, cand, ms] : rows) {
        series[k].emplace_back(m, static_cast<double>(cand));
        max_y = std::max(max_y, static_cast<double>(cand));
        max_x = std::max(max_x, m);
    }
    const double w = 640, h = 400, pad = 40;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    int ci = 0;
    for (const auto& [k, pts] : series) {
        svg << "<polyline fill=\"none\" stroke=\"" << colors[ci % 5] << "\" points=\"";
        for (auto [x, y] : pts) {
            double px = pad + (w - 2 * pad) * x / max_x;
            double py = h - pad - (h - 2 * pad) * y / max_y;
            svg << px << ',' << py << ' ';
        }
        svg << "\"/>\n<text x=\"" << w - pad + 4 << "\" y=\"" << 20 + 16 * ci << "\" fill=\""
            << colors[ci % 5] << "\" font-size=\"12\">k=" << k << "</text>\n";
        ++ci;
    }
    svg << "</svg>\n";
    write_file(path, svg.str());
}

int cmd_bench(const GlobalOpts& g, std::vector<int> k_list, std::vector<int> m_list, int reps,
              const std::string& out_csv, const std::string& plot_path) {
    std::vector<std::tuple<int, int, std::uint64_t, double>> rows;
    std::ostringstream csv;
    csv << "k,m,seed,candidates,runtime_ms\n";
    for (int k : k_list) {
        for (int m : m_list) {
            for (int rep = 0; rep < reps; ++rep) {
                const std::uint64_t seed =
                    g.seed * 1000003ULL + static_cast<std::uint64_t>(k) * 10007ULL +
                    static_cast<std::uint64_t>(m) * 101ULL + static_cast<std::uint64_t>(rep);
                ChordModel model = random_polygon_model(k, m, seed);
                const std::uint64_t candidates = count_boundaries(model);
                SolveOptions opts;
                opts.jobs = g.jobs;
                const auto t0 = std::chrono::steady_clock::now();
                SolveResult r = solve_min_pds_polygon(model, opts);
                const double ms = ms_since(t0);
                (void)r;
                csv << k << ',' << m << ',' << seed << ',' << candidates << ',' << ms << '\n';
                rows.emplace_back(k, m, candidates, ms);
            }
        }
    }
    if (out_csv.empty()) {
        std::cout << csv.str();
    } else {
        write_file(out_csv, csv.str());
    }
    if (!plot_path.empty()) write_bench_plot(plot_path, rows);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    std::ostringstream echo;
    for (int i = 0; i < argc; ++i) echo << (i ? " " : "") << argv[i];

    CLI::App app{"Exact domination and paired domination on chord intersection models"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", g.seed, "Seed for generators");
    app.add_option("--jobs", g.jobs, "Worker threads for candidate evaluation")
        ->check(CLI::PositiveNumber);
    app.add_option("--oracle-cap", g.oracle_cap, "Vertex cap for brute-force oracles");

    auto* solve = app.add_subcommand("solve", "Solve ds/pds on a model file");
    std::string solve_kind, solve_engine = "polygon", solve_input;
    solve->add_option("kind", solve_kind, "ds or pds")
        ->required()
        ->check(CLI::IsMember({"ds", "pds"}));
    solve->add_option("input", solve_input, "Model file")->required();
    solve->add_option("--engine", solve_engine, "polygon or oracle")
        ->check(CLI::IsMember({"polygon", "oracle"}));

    auto* reduce = app.add_subcommand("reduce", "Build the circle model of a digraph");
    std::string reduce_input, reduce_out, reduce_names;
    reduce->add_option("input", reduce_input, "digraph v1 file")->required();
    reduce->add_option("-o,--out", reduce_out, "Output circle model path")->required();
    reduce->add_option("--names", reduce_names, "Name table path (default: <out>.names)");

    auto* witness = app.add_subcommand("witness", "Convert witnesses across the reduction");
    std::string wit_dir, wit_digraph, wit_file, wit_out;
    witness->add_option("direction", wit_dir, "to-pds or to-path")
        ->required()
        ->check(CLI::IsMember({"to-pds", "to-path"}));
    witness->add_option("digraph", wit_digraph, "digraph v1 file")->required();
    witness->add_option("witness", wit_file, "Path file (vertices) or PDS file (chord ids)")
        ->required();
    witness->add_option("-o,--out", wit_out, "Write the converted witness here");

    auto* validate = app.add_subcommand("validate", "Parse and validate an input file");
    std::string val_input, val_digraph, val_names;
    validate->add_option("input", val_input, "Model or digraph file")->required();
    validate->add_option("--digraph", val_digraph, "Digraph to rebuild the reduction from");
    validate->add_option("--names", val_names, "Expected name table");

    auto* gen = app.add_subcommand("gen", "Generate random instances");
    std::string gen_kind, gen_out;
    int gen_k = 4, gen_m = 8, gen_n = 4;
    double gen_p = 0.5;
    gen->add_option("kind", gen_kind, "polygon or digraph")
        ->required()
        ->check(CLI::IsMember({"polygon", "digraph"}));
    gen->add_option("--k", gen_k, "Polygon sides");
    gen->add_option("--m", gen_m, "Chord count");
    gen->add_option("--n", gen_n, "Digraph vertices");
    gen->add_option("--p", gen_p, "Digraph edge probability");
    gen->add_option("-o,--out", gen_out, "Output path (stdout when omitted)");

    auto* bench = app.add_subcommand("bench", "Seeded solver grid, CSV output");
    std::vector<int> bench_k{3, 4}, bench_m{4, 6, 8};
    int bench_reps = 1;
    std::string bench_out, bench_plot;
    bench->add_option("--k-list", bench_k, "Polygon side counts");
    bench->add_option("--m-list", bench_m, "Chord counts");
    bench->add_option("--reps", bench_reps, "Seeds per grid cell");
    bench->add_option("--out", bench_out, "CSV path (stdout when omitted)");
    bench->add_option("--plot", bench_plot, "Optional SVG plot path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (solve->parsed()) return cmd_solve(g, solve_kind, solve_engine, solve_input, echo.str());
        if (reduce->parsed())
            return cmd_reduce(g, reduce_input, reduce_out, reduce_names, echo.str());
        if (witness->parsed())
            return cmd_witness(g, wit_dir, wit_digraph, wit_file, wit_out, echo.str());
        if (validate->parsed())
            return cmd_validate(g, val_input, val_digraph, val_names, echo.str());
        if (gen->parsed())
            return cmd_gen(g, gen_kind, gen_k, gen_m, gen_n, gen_p, gen_out, echo.str());
        if (bench->parsed())
            return cmd_bench(g, bench_k, bench_m, bench_reps, bench_out, bench_plot);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
