#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "rooklab/bitrule.hpp"
#include "rooklab/dicolor.hpp"
#include "rooklab/formats.hpp"

using namespace rooklab;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int exit_code;
    std::string output;
};

struct CliEnv {
    std::string rooklab;
    std::string minisolver;
    fs::path dir;

    CliEnv() {
        const char* bin = std::getenv("ROOKLAB_BIN");
        const char* sat = std::getenv("MINISOLVER_BIN");
        REQUIRE_MESSAGE(bin != nullptr, "ROOKLAB_BIN must point at the rooklab binary");
        REQUIRE_MESSAGE(sat != nullptr, "MINISOLVER_BIN must point at the minisolver binary");
        rooklab = bin;
        minisolver = sat;
        dir = fs::temp_directory_path() /
              ("rooklab_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~CliEnv() { fs::remove_all(dir); }

    std::string path(const std::string& name) const { return (dir / name).string(); }

    CmdResult run(const std::string& args) const {
        const std::string out = path("last_output.txt");
        const int status =
            std::system((rooklab + " " + args + " > '" + out + "' 2>&1").c_str());
        std::ifstream in(out);
        std::stringstream ss;
        ss << in.rdbuf();
        return {WEXITSTATUS(status), ss.str()};
    }

    CmdResult run_raw(const std::string& cmd) const {
        const std::string out = path("last_output.txt");
        const int status = std::system((cmd + " > '" + out + "' 2>&1").c_str());
        std::ifstream in(out);
        std::stringstream ss;
        ss << in.rdbuf();
        return {WEXITSTATUS(status), ss.str()};
    }

    std::string slurp(const std::string& p) const {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
};

} // namespace

TEST_CASE("build writes arc lists and summaries") {
    CliEnv env;
    auto r = env.run("build --n 2 --out " + env.path("d2.dg"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n=4 m=4\n");
    CHECK(env.slurp(env.path("d2.dg")).starts_with("digraph 4 4\n"));

    r = env.run("build --n 1 --out " + env.path("d1.dg"));
    CHECK(r.exit_code == 0);
    CHECK(env.slurp(env.path("d1.dg")) == "digraph 1 0\n");

    r = env.run("build --n 4 --out " + env.path("d4.dg"));
    CHECK(r.output == "n=16 m=48\n");
    CHECK(env.slurp(env.path("d4.dg")).starts_with("digraph 16 48\n"));

    // the written file parses back to the built board
    const Digraph parsed = read_arc_list_file(env.path("d4.dg"));
    CHECK(parsed.arcs() == build_rook_digraph(4).graph.arcs());

    CHECK(env.run("build --n 0 --out " + env.path("x.dg")).exit_code == 2);
}

TEST_CASE("verify reports checks and exit codes") {
    CliEnv env;
    env.run("build --n 8 --out " + env.path("d8.dg"));
    auto r = env.run("verify " + env.path("d8.dg") + " --checks triangle");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "PASS triangle\n");

    r = env.run("verify " + env.path("d8.dg"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "PASS oriented\nPASS triangle\nPASS claw\n");

    std::ofstream(env.path("opp.dg")) << "digraph 2 2\n0 1\n1 0\n";
    r = env.run("verify " + env.path("opp.dg") + " --checks oriented");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("FAIL oriented") != std::string::npos);
    CHECK(r.output.find("(0,1)") != std::string::npos);

    env.run("build --n 4 --out " + env.path("d4.dg"));
    r = env.run("verify " + env.path("d4.dg") + " --rook-n 4 --checks squares4cycle");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "PASS squares4cycle\n");

    // usage errors
    CHECK(env.run("verify " + env.path("d4.dg") + " --checks squares4cycle").exit_code == 2);
    CHECK(env.run("verify " + env.path("d4.dg") + " --checks nonsense").exit_code == 2);
    std::ofstream(env.path("broken.dg")) << "digraph 2 1\n0 junk\n";
    r = env.run("verify " + env.path("broken.dg"));
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 2") != std::string::npos);
}

TEST_CASE("dichromatic native mode") {
    CliEnv env;
    env.run("build --n 2 --out " + env.path("d2.dg"));
    auto r = env.run("dichromatic " + env.path("d2.dg") + " --out " + env.path("d2.col"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "chi = 2\n");
    const Coloring witness = read_coloring_file(env.path("d2.col"));
    CHECK(witness.k == 2);
    CHECK(is_valid_dicoloring(build_rook_digraph(2).graph, witness));

    env.run("build --n 1 --out " + env.path("d1.dg"));
    r = env.run("dichromatic " + env.path("d1.dg"));
    CHECK(r.output == "chi = 1\n");

    // tiny budget: inconclusive, distinct exit code
    env.run("build --n 8 --out " + env.path("d8.dg"));
    r = env.run("dichromatic " + env.path("d8.dg") + " --budget 10");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("INCONCLUSIVE") != std::string::npos);

    // ROOKLAB_BUDGET is honored as the default
    r = env.run_raw("ROOKLAB_BUDGET=10 " + env.rooklab + " dichromatic " + env.path("d8.dg"));
    CHECK(r.exit_code == 3);
    r = env.run_raw("ROOKLAB_BUDGET=banana " + env.rooklab + " dichromatic " +
                    env.path("d8.dg"));
    CHECK(r.exit_code == 2);
}

TEST_CASE("the SAT path through files") {
    CliEnv env;
    env.run("build --n 4 --out " + env.path("d4.dg"));

    auto r = env.run("dichromatic " + env.path("d4.dg") + " --mode sat --k 2 --out " +
                     env.path("d4k2.cnf"));
    CHECK(r.exit_code == 0);
    CHECK(env.slurp(env.path("d4k2.cnf")).starts_with("p cnf 272 3608\n"));

    // sat mode without --k is a usage error
    CHECK(env.run("dichromatic " + env.path("d4.dg") + " --mode sat").exit_code == 2);

    auto sat = env.run_raw(env.minisolver + " " + env.path("d4k2.cnf") + " " +
                           env.path("d4k2.model"));
    CHECK(sat.exit_code == 10);

    r = env.run("decode-model " + env.path("d4.dg") + " --k 2 --model " +
                env.path("d4k2.model") + " --out " + env.path("d4.col"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "valid 2-coloring decoded from model\n");
    const Coloring decoded = read_coloring_file(env.path("d4.col"));
    CHECK(is_valid_dicoloring(build_rook_digraph(4).graph, decoded));

    // encode-cnf agrees with the dichromatic sat mode byte for byte
    r = env.run("encode-cnf " + env.path("d4.dg") + " --k 2 --out " + env.path("enc.cnf"));
    CHECK(r.exit_code == 0);
    CHECK(env.slurp(env.path("enc.cnf")) == env.slurp(env.path("d4k2.cnf")));

    // k = 1 is unsatisfiable: the board has directed cycles
    env.run("encode-cnf " + env.path("d4.dg") + " --k 1 --out " + env.path("d4k1.cnf"));
    auto unsat = env.run_raw(env.minisolver + " " + env.path("d4k1.cnf"));
    CHECK(unsat.exit_code == 20);
    CHECK(unsat.output.starts_with("s UNSATISFIABLE"));

    // dichromatic --mode sat with a model validates it
    r = env.run("dichromatic " + env.path("d4.dg") + " --mode sat --k 2 --model " +
                env.path("d4k2.model"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("valid 2-coloring") != std::string::npos);
}

TEST_CASE("squares and the square-free search") {
    CliEnv env;
    std::ofstream(env.path("zeros.col")) << "coloring 4 1\n0 0\n1 0\n2 0\n3 0\n";
    auto r = env.run("squares " + env.path("zeros.col") + " --n 2");
    CHECK(r.exit_code == 1);
    CHECK(r.output == "(1,1,1)\n");

    r = env.run("square-free-search --n 3 --k 2 --out " + env.path("sf.col"));
    CHECK(r.exit_code == 0);
    r = env.run("squares " + env.path("sf.col") + " --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "none\n");

    r = env.run("square-free-search --n 2 --k 1");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("none exists") != std::string::npos);

    r = env.run("square-free-search --n 6 --k 1 --budget 3");
    CHECK(r.exit_code == 3);

    // size mismatch is a usage error
    CHECK(env.run("squares " + env.path("zeros.col") + " --n 3").exit_code == 2);
    std::ofstream(env.path("garbage.col")) << "coloring 2 1\n0 0\nbroken\n";
    CHECK(env.run("squares " + env.path("garbage.col") + " --n 2").exit_code == 2);
}

TEST_CASE("DOT export") {
    CliEnv env;
    env.run("build --n 2 --out " + env.path("d2.dg"));
    auto r = env.run("export-dot " + env.path("d2.dg") + " --out " + env.path("d2.dot") +
                     " --rook-n 2");
    CHECK(r.exit_code == 0);
    const std::string dot = env.slurp(env.path("d2.dot"));
    CHECK(dot.find("(1,1)") != std::string::npos);
    CHECK(dot.find("v0 -> v1;") != std::string::npos);

    std::ofstream(env.path("empty.dg")) << "digraph 2 0\n";
    env.run("export-dot " + env.path("empty.dg") + " --out " + env.path("empty.dot"));
    const std::string lonely = env.slurp(env.path("empty.dot"));
    CHECK(lonely.find("v1 [label=\"1\"]") != std::string::npos);
    CHECK(lonely.find("->") == std::string::npos);
}

TEST_CASE("outputs are byte deterministic") {
    CliEnv env;
    env.run("build --n 6 --out " + env.path("a.dg"));
    env.run("build --n 6 --out " + env.path("b.dg"));
    CHECK(env.slurp(env.path("a.dg")) == env.slurp(env.path("b.dg")));

    env.run("export-dot " + env.path("a.dg") + " --out " + env.path("a.dot") + " --rook-n 6");
    env.run("export-dot " + env.path("b.dg") + " --out " + env.path("b.dot") + " --rook-n 6");
    CHECK(env.slurp(env.path("a.dot")) == env.slurp(env.path("b.dot")));

    env.run("encode-cnf " + env.path("a.dg") + " --k 2 --out " + env.path("a.cnf"));
    env.run("encode-cnf " + env.path("b.dg") + " --k 2 --out " + env.path("b.cnf"));
    CHECK(env.slurp(env.path("a.cnf")) == env.slurp(env.path("b.cnf")));
}

TEST_CASE("verbose mode prints the cell mapping") {
    CliEnv env;
    const auto r = env.run("--verbose build --n 2 --out " + env.path("d2.dg"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("# vertex 0 = (1,1)") != std::string::npos);
    CHECK(r.output.find("# vertex 3 = (2,2)") != std::string::npos);
}

TEST_CASE("unwritable output path fails cleanly") {
    CliEnv env;
    const auto r = env.run("build --n 2 --out /nonexistent_dir_zzz/out.dg");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("error") != std::string::npos);
}

TEST_CASE("SIGINT during a long solve yields a partial report") {
    CliEnv env;
    env.run("build --n 16 --out " + env.path("d16.dg"));
    const auto r = env.run_raw("timeout --preserve-status -s INT 1 " + env.rooklab +
                               " dichromatic " + env.path("d16.dg"));
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("INCONCLUSIVE") != std::string::npos);
    CHECK(r.output.find("interrupted") != std::string::npos);
    CHECK(r.output.find("best known: chi <=") != std::string::npos);
}

TEST_CASE("minisolver answers match on crafted formulas") {
    CliEnv env;
    std::ofstream(env.path("sat.cnf")) << "p cnf 2 2\n1 -2 0\n2 0\n";
    CHECK(env.run_raw(env.minisolver + " " + env.path("sat.cnf")).exit_code == 10);
    std::ofstream(env.path("unsat.cnf")) << "p cnf 1 2\n1 0\n-1 0\n";
    auto r = env.run_raw(env.minisolver + " " + env.path("unsat.cnf"));
    CHECK(r.exit_code == 20);
    std::ofstream(env.path("trivial.cnf")) << "p cnf 0 0\n";
    CHECK(env.run_raw(env.minisolver + " " + env.path("trivial.cnf")).exit_code == 10);
}
