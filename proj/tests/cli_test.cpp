#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#ifndef _WIN32
#include <sys/wait.h>
#include <unistd.h>
#endif
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(BUSFACTOR_CLI_PATH) + " " + args;
    const int status = std::system(cmd.c_str());
#ifdef _WIN32
    return status;
#else
    return WEXITSTATUS(status);
#endif
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("busfactor_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

void write_gstar(const fs::path& p) {
    std::ofstream out(p);
    out << "p1 t1\np1 t2\np2 t2\np2 t3\n";
}

}  // namespace

TEST_CASE("generate is deterministic and validates parameters") {
    TempDir tmp;
    const auto a = tmp.path / "a.el";
    const auto b = tmp.path / "b.el";
    const std::string params =
        "--people 50 --tasks 50 --lambda-p 0.5 --lambda-t 0.5 --kp 6 --kt 6 --seed 7";
    CHECK(run_cli("generate " + params + " --out " + a.string() + " > /dev/null") == 0);
    CHECK(run_cli("generate " + params + " --out " + b.string() + " > /dev/null") == 0);
    CHECK(fs::exists(a));
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());

    // max degree larger than the opposite side
    CHECK(run_cli("generate --people 10 --tasks 10 --kp 5000 --out " +
                  (tmp.path / "bad.el").string() + " 2> /dev/null") == 2);
}

TEST_CASE("estimate on the worked example") {
    TempDir tmp;
    const auto graph = tmp.path / "g.el";
    write_gstar(graph);

    const auto out = tmp.path / "est.txt";
    CHECK(run_cli("estimate --input " + graph.string() +
                  " --measure avelino --t 0.5 --heuristic combined > " +
                  out.string()) == 0);
    CHECK(slurp(out) == "avelino,combined,2\n");

    // tau threshold 0 degenerates to the plain base heuristic
    const auto p0 = tmp.path / "p0.txt";
    const auto pplain = tmp.path / "pp.txt";
    CHECK(run_cli("estimate --input " + graph.string() +
                  " --measure piccolo --heuristic min_cov --tau-threshold 0 > " +
                  p0.string()) == 0);
    CHECK(run_cli("estimate --input " + graph.string() +
                  " --measure piccolo --heuristic min_cov --tau-frac 0.0 > " +
                  pplain.string()) == 0);
    CHECK(slurp(p0) == slurp(pplain));

    // both measures by default
    const auto both = tmp.path / "both.txt";
    CHECK(run_cli("estimate --input " + graph.string() + " > " + both.string()) == 0);
    const std::string text = slurp(both);
    CHECK(text.find("avelino,combined,") != std::string::npos);
    CHECK(text.find("piccolo,combined,") != std::string::npos);

    // curve export
    const auto curve = tmp.path / "curve.csv";
    CHECK(run_cli("estimate --input " + graph.string() +
                  " --measure piccolo --heuristic min_cov --curve-out " +
                  curve.string() + " > /dev/null") == 0);
    CHECK(slurp(curve).rfind("removed,value\n", 0) == 0);

    // exclusive tau flags
    CHECK(run_cli("estimate --input " + graph.string() +
                  " --tau-threshold 2 --tau-frac 0.5 2> /dev/null") == 2);

    // parse error in the input file
    const auto broken = tmp.path / "broken.el";
    {
        std::ofstream f(broken);
        f << "t1 p1\n";
    }
    CHECK(run_cli("estimate --input " + broken.string() + " 2> /dev/null") == 2);
}

TEST_CASE("exact oracle guard trips on a 30-person graph") {
    TempDir tmp;
    const auto graph = tmp.path / "big.el";
    {
        std::ofstream f(graph);
        for (int i = 1; i <= 30; ++i) f << "p" << i << " t" << i << "\n";
    }
    CHECK(run_cli("estimate --input " + graph.string() +
                  " --measure avelino --exact 2> /dev/null") == 3);

    const auto small = tmp.path / "small.el";
    write_gstar(small);
    const auto out = tmp.path / "exact.txt";
    CHECK(run_cli("estimate --input " + small.string() +
                  " --measure avelino --exact > " + out.string()) == 0);
    CHECK(slurp(out) == "avelino,exact,2\n");
}

TEST_CASE("study subcommands write their CSV artifacts") {
    TempDir tmp;
    const auto dir = tmp.path / "acc";
    CHECK(run_cli("study accuracy --graphs 3 --seed 1 --out " + dir.string() +
                  " > /dev/null 2> /dev/null") == 0);
    CHECK(fs::exists(dir / "per_graph.csv"));
    CHECK(fs::exists(dir / "summary.csv"));
    // header + 3 graphs x 10 heuristic-measure rows
    {
        std::ifstream in(dir / "per_graph.csv");
        std::string line;
        int rows = 0;
        while (std::getline(in, line)) ++rows;
        CHECK(rows == 1 + 3 * 10);
    }

    const auto tdir = tmp.path / "tim";
    CHECK(run_cli("study timing --sizes 50,100 --repeats 1 --out " + tdir.string() +
                  " > /dev/null") == 0);
    {
        std::ifstream in(tdir / "timings.csv");
        std::string line;
        int rows = 0;
        while (std::getline(in, line)) ++rows;
        CHECK(rows == 1 + 2 * 4);
    }

    // sensitivity refuses fewer than 30 reports
    const auto sdir = tmp.path / "sens";
    CHECK(run_cli("study sensitivity --reports " + (dir / "per_graph.csv").string() +
                  " --out " + sdir.string() + " 2> /dev/null") == 2);
    CHECK(run_cli("study sensitivity --reports " + (dir / "missing.csv").string() +
                  " --out " + sdir.string() + " 2> /dev/null") == 2);
}
