// rooklab: build the bitwise rook-board orientations, verify their structure,
// and measure dichromatic numbers natively or through the DIMACS path.
//
// Exit codes (stable for scripting):
//   0  all checks pass / value computed
//   1  a check failed, witness reported
//   2  usage or parse error
//   3  inconclusive (node budget exhausted or interrupted)

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rooklab/bitrule.hpp"
#include "rooklab/dicolor.hpp"
#include "rooklab/digraph.hpp"
#include "rooklab/formats.hpp"
#include "rooklab/ramsey.hpp"
#include "rooklab/satenc.hpp"

namespace {

using namespace rooklab;

std::atomic<bool> g_interrupted{false};

void handle_sigint(int) { g_interrupted.store(true); }

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

std::uint64_t default_budget() {
    const char* env = std::getenv("ROOKLAB_BUDGET");
    if (!env || !*env) return std::numeric_limits<std::uint64_t>::max();
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        throw CLI::ValidationError("ROOKLAB_BUDGET", "not an unsigned integer: " +
                                                         std::string(env));
    return v;
}

void write_file(const std::string& text, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

void print_rook_mapping(int n) {
    for (int v = 0; v < n * n; ++v)
        std::cout << "# vertex " << v << " = (" << (v / n + 1) << ',' << (v % n + 1)
                  << ")\n";
}

// ---------- subcommands ----------

int cmd_build(int n, const std::string& out_path, bool verbose) {
    const RookDigraph rd = build_rook_digraph(n);
    write_arc_list_file(rd.graph, out_path);
    if (verbose) print_rook_mapping(n);
    std::cout << "n=" << rd.graph.vertex_count() << " m=" << rd.graph.arc_count() << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& in_path, const std::vector<std::string>& checks,
               std::optional<int> rook_n) {
    const Digraph d = read_arc_list_file(in_path);
    if (rook_n && *rook_n * *rook_n != d.vertex_count()) {
        std::cerr << "verify: file has " << d.vertex_count() << " vertices, not a "
                  << *rook_n << "x" << *rook_n << " board\n";
        return kExitUsage;
    }
    bool all_pass = true;
    for (const std::string& check : checks) {
        if (check == "oriented") {
            if (auto w = find_opposite_pair(d)) {
                std::cout << "FAIL oriented: opposite arcs (" << w->u << "," << w->v
                          << ") and (" << w->v << "," << w->u << ")\n";
                all_pass = false;
            } else {
                std::cout << "PASS oriented\n";
            }
        } else if (check == "triangle") {
            if (auto w = find_directed_triangle(d)) {
                std::cout << "FAIL triangle: directed 3-cycle " << w->u << " -> " << w->v
                          << " -> " << w->w << " -> " << w->u << "\n";
                all_pass = false;
            } else {
                std::cout << "PASS triangle\n";
            }
        } else if (check == "claw") {
            if (auto w = find_claw(d)) {
                std::cout << "FAIL claw: center " << w->center << ", leaves " << w->leaves[0]
                          << " " << w->leaves[1] << " " << w->leaves[2] << "\n";
                all_pass = false;
            } else {
                std::cout << "PASS claw\n";
            }
        } else if (check == "squares4cycle") {
            if (!rook_n) {
                std::cerr << "verify: squares4cycle requires --rook-n\n";
                return kExitUsage;
            }
            const int n = *rook_n;
            auto id = [n](int a, int b) { return (a - 1) * n + (b - 1); };
            bool okay = true;
            for (int a = 1; a <= n && okay; ++a)
                for (int c = a + 1; c <= n && okay; ++c)
                    for (int b = 1; b <= n && okay; ++b)
                        for (int dd = b + 1; dd <= n && okay; ++dd) {
                            if (!generalized_square_predicate(a, c, b, dd)) continue;
                            const std::array<int, 4> quad{id(a, b), id(a, dd), id(c, b),
                                                          id(c, dd)};
                            if (!is_induced_directed_4cycle(d, quad)) {
                                std::cout << "FAIL squares4cycle: cells (" << a << "," << b
                                          << ") (" << a << "," << dd << ") (" << c << ","
                                          << b << ") (" << c << "," << dd
                                          << ") do not induce a directed 4-cycle\n";
                                okay = false;
                            }
                        }
            if (okay) std::cout << "PASS squares4cycle\n";
            all_pass = all_pass && okay;
        } else {
            std::cerr << "verify: unknown check '" << check << "'\n";
            return kExitUsage;
        }
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_dichromatic(const std::string& in_path, const std::string& mode,
                    std::optional<int> k_probe, std::optional<std::string> out_path,
                    std::optional<std::string> model_path, std::uint64_t budget) {
    const Digraph d = read_arc_list_file(in_path);
    if (mode == "native") {
        SolveOptions opt;
        opt.node_budget = budget;
        opt.cancel = &g_interrupted;
        const DicolorResult res = dichromatic_number(d, opt);
        if (res.outcome == SearchOutcome::BudgetExceeded) {
            const Coloring upper = greedy_dicoloring(d);
            std::cout << "INCONCLUSIVE after " << res.nodes << " nodes ("
                      << (g_interrupted.load() ? "interrupted" : "budget exhausted")
                      << "); best known: chi <= " << upper.k << " (greedy)\n";
            return kExitInconclusive;
        }
        std::cout << "chi = " << res.chi << "\n";
        const std::string witness_path = out_path ? *out_path : in_path + ".coloring";
        write_coloring_file(res.witness, witness_path);
        return kExitOk;
    }
    if (mode == "sat") {
        if (!k_probe) {
            std::cerr << "dichromatic: --mode sat requires --k\n";
            return kExitUsage;
        }
        auto [formula, vm] = encode_dicoloring(d, *k_probe);
        if (!model_path) {
            const std::string cnf_path =
                out_path ? *out_path : in_path + ".k" + std::to_string(*k_probe) + ".cnf";
            write_file(write_dimacs(formula), cnf_path);
            std::cout << "wrote " << cnf_path << ": " << formula.var_count << " vars, "
                      << formula.clauses.size() << " clauses\n";
            return kExitOk;
        }
        std::ifstream min(*model_path);
        if (!min) {
            std::cerr << "dichromatic: cannot open " << *model_path << "\n";
            return kExitUsage;
        }
        std::string text((std::istreambuf_iterator<char>(min)),
                         std::istreambuf_iterator<char>());
        const Model model = parse_model(text, formula.var_count);
        const Coloring coloring = decode_model(model, vm);
        if (auto cyc = find_monochromatic_cycle(d, coloring)) {
            std::cout << "FAIL: decoded coloring has a monochromatic cycle in color "
                      << cyc->color << "\n";
            return kExitCheckFailed;
        }
        std::cout << "valid " << *k_probe << "-coloring decoded from model\n";
        if (out_path) write_coloring_file(coloring, *out_path);
        return kExitOk;
    }
    std::cerr << "dichromatic: unknown mode '" << mode << "'\n";
    return kExitUsage;
}

int cmd_squares(const std::string& coloring_path, int n) {
    const Coloring c = read_coloring_file(coloring_path);
    if (static_cast<int>(c.colors.size()) != n * n) {
        std::cerr << "squares: coloring has " << c.colors.size() << " vertices, not a "
                  << n << "x" << n << " board\n";
        return kExitUsage;
    }
    const GridColoring g = vertex_to_grid_coloring(c, n);
    if (auto w = find_monochromatic_square(g)) {
        std::cout << "(" << w->x << "," << w->y << "," << w->t << ")\n";
        return kExitCheckFailed;
    }
    std::cout << "none\n";
    return kExitOk;
}

int cmd_square_free_search(int n, int k, std::uint64_t budget,
                           std::optional<std::string> out_path) {
    SquareFreeOptions opt;
    opt.assignment_budget = budget;
    opt.cancel = &g_interrupted;
    const SquareFreeResult res = square_free_search(n, k, opt);
    switch (res.status) {
        case SquareFreeResult::Status::Found:
            std::cout << "found a square-free " << k << "-coloring of the " << n << "x" << n
                      << " board (" << res.assignments << " assignments)\n";
            if (out_path) write_coloring_file(grid_to_vertex_coloring(res.grid), *out_path);
            return kExitOk;
        case SquareFreeResult::Status::NoneExists:
            std::cout << "none exists: exhaustive search (" << res.assignments
                      << " assignments)\n";
            return kExitCheckFailed;
        default:
            std::cout << "INCONCLUSIVE after " << res.assignments << " assignments ("
                      << (g_interrupted.load() ? "interrupted" : "budget exhausted")
                      << ")\n";
            return kExitInconclusive;
    }
}

int cmd_export_dot(const std::string& in_path, const std::string& out_path,
                   std::optional<int> rook_n, bool verbose) {
    const Digraph d = read_arc_list_file(in_path);
    write_file(write_dot(d, rook_n), out_path);
    if (verbose && rook_n) print_rook_mapping(*rook_n);
    std::cout << "wrote " << out_path << "\n";
    return kExitOk;
}

int cmd_encode_cnf(const std::string& in_path, int k, const std::string& out_path) {
    const Digraph d = read_arc_list_file(in_path);
    auto [formula, vm] = encode_dicoloring(d, k);
    write_file(write_dimacs(formula), out_path);
    std::cout << "wrote " << out_path << ": " << formula.var_count << " vars, "
              << formula.clauses.size() << " clauses\n";
    return kExitOk;
}

int cmd_decode_model(const std::string& in_path, int k, const std::string& model_path,
                     std::optional<std::string> out_path) {
    const Digraph d = read_arc_list_file(in_path);
    const VarMap vm{d.vertex_count(), k};
    std::ifstream min(model_path);
    if (!min) {
        std::cerr << "decode-model: cannot open " << model_path << "\n";
        return kExitUsage;
    }
    std::string text((std::istreambuf_iterator<char>(min)), std::istreambuf_iterator<char>());
    const Model model = parse_model(text, vm.var_count());
    const Coloring coloring = decode_model(model, vm);
    if (auto cyc = find_monochromatic_cycle(d, coloring)) {
        std::cout << "FAIL: decoded coloring has a monochromatic cycle in color "
                  << cyc->color << "\n";
        return kExitCheckFailed;
    }
    std::cout << "valid " << k << "-coloring decoded from model\n";
    if (out_path) write_coloring_file(coloring, *out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, handle_sigint);

    CLI::App app{"triangle-free rook-board orientations and their dichromatic numbers"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("--verbose", verbose, "print the vertex id <-> (a,b) cell mapping");

    // build
    auto* build = app.add_subcommand("build", "construct the oriented N x N rook board");
    int build_n = 0;
    std::string build_out;
    build->add_option("--n", build_n, "board size N")->required()->check(CLI::PositiveNumber);
    build->add_option("--out", build_out, "arc list output path")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run structural checks on an arc list");
    std::string verify_in;
    std::vector<std::string> verify_checks{"oriented", "triangle", "claw"};
    int verify_rook_n = 0;
    verify->add_option("input", verify_in, "arc list file")->required();
    verify->add_option("--checks", verify_checks,
                       "subset of oriented,triangle,claw,squares4cycle")
        ->delimiter(',');
    verify->add_option("--rook-n", verify_rook_n, "declare the file to be the oriented N x N board");

    // dichromatic
    auto* dichr = app.add_subcommand("dichromatic", "exact dichromatic number (native or SAT files)");
    std::string dichr_in, dichr_mode = "native";
    int dichr_k = 0;
    std::string dichr_out, dichr_model;
    std::uint64_t dichr_budget = 0;
    dichr->add_option("input", dichr_in, "arc list file")->required();
    dichr->add_option("--mode", dichr_mode, "native or sat")->check(CLI::IsMember({"native", "sat"}));
    dichr->add_option("--k", dichr_k, "color count probed on the SAT path");
    dichr->add_option("--out", dichr_out, "output path (witness coloring / DIMACS file)");
    dichr->add_option("--model", dichr_model, "model file to decode and validate");
    dichr->add_option("--budget", dichr_budget, "node budget (overrides ROOKLAB_BUDGET)");

    // squares
    auto* squares = app.add_subcommand("squares", "first monochromatic axis-parallel square");
    std::string squares_in;
    int squares_n = 0;
    squares->add_option("coloring", squares_in, "coloring file over N^2 vertices")->required();
    squares->add_option("--n", squares_n, "board size N")->required()->check(CLI::PositiveNumber);

    // square-free-search
    auto* sfs = app.add_subcommand("square-free-search", "search for a square-free k-coloring");
    int sfs_n = 0, sfs_k = 0;
    std::uint64_t sfs_budget = 0;
    std::string sfs_out;
    sfs->add_option("--n", sfs_n, "board size N")->required()->check(CLI::PositiveNumber);
    sfs->add_option("--k", sfs_k, "color count")->required()->check(CLI::PositiveNumber);
    sfs->add_option("--budget", sfs_budget, "assignment budget (overrides ROOKLAB_BUDGET)");
    sfs->add_option("--out", sfs_out, "write the found coloring here");

    // export-dot
    auto* dot = app.add_subcommand("export-dot", "write the digraph as DOT");
    std::string dot_in, dot_out;
    int dot_rook_n = 0;
    dot->add_option("input", dot_in, "arc list file")->required();
    dot->add_option("--out", dot_out, "DOT output path")->required();
    dot->add_option("--rook-n", dot_rook_n, "label vertices as board cells (a,b)");

    // encode-cnf
    auto* enc = app.add_subcommand("encode-cnf", "emit the acyclic k-coloring CNF as DIMACS");
    std::string enc_in, enc_out;
    int enc_k = 0;
    enc->add_option("input", enc_in, "arc list file")->required();
    enc->add_option("--k", enc_k, "color count")->required()->check(CLI::PositiveNumber);
    enc->add_option("--out", enc_out, "DIMACS output path")->required();

    // decode-model
    auto* dec = app.add_subcommand("decode-model", "decode a DIMACS model into a coloring");
    std::string dec_in, dec_model, dec_out;
    int dec_k = 0;
    dec->add_option("input", dec_in, "arc list file")->required();
    dec->add_option("--k", dec_k, "color count of the encoding")->required()->check(CLI::PositiveNumber);
    dec->add_option("--model", dec_model, "model file")->required();
    dec->add_option("--out", dec_out, "write the decoded coloring here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const std::uint64_t env_budget = default_budget();
        if (build->parsed()) return cmd_build(build_n, build_out, verbose);
        if (verify->parsed())
            return cmd_verify(verify_in, verify_checks,
                              verify->count("--rook-n") ? std::optional<int>(verify_rook_n)
                                                        : std::nullopt);
        if (dichr->parsed())
            return cmd_dichromatic(
                dichr_in, dichr_mode,
                dichr->count("--k") ? std::optional<int>(dichr_k) : std::nullopt,
                dichr->count("--out") ? std::optional<std::string>(dichr_out) : std::nullopt,
                dichr->count("--model") ? std::optional<std::string>(dichr_model) : std::nullopt,
                dichr->count("--budget") ? dichr_budget : env_budget);
        if (squares->parsed()) return cmd_squares(squares_in, squares_n);
        if (sfs->parsed())
            return cmd_square_free_search(sfs_n, sfs_k,
                                          sfs->count("--budget") ? sfs_budget : env_budget,
                                          sfs->count("--out") ? std::optional<std::string>(sfs_out)
                                                              : std::nullopt);
        if (dot->parsed())
            return cmd_export_dot(dot_in, dot_out,
                                  dot->count("--rook-n") ? std::optional<int>(dot_rook_n)
                                                         : std::nullopt,
                                  verbose);
        if (enc->parsed()) return cmd_encode_cnf(enc_in, enc_k, enc_out);
        if (dec->parsed())
            return cmd_decode_model(dec_in, dec_k, dec_model,
                                    dec->count("--out") ? std::optional<std::string>(dec_out)
                                                        : std::nullopt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
