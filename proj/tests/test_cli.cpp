// End-to-end tests driving the installed binary as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#ifndef GFBM_CLI_PATH
#error "GFBM_CLI_PATH must point at the gfbm binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int counter = 0;

RunResult run_cli(const std::string& args) {
    const std::string tag = std::to_string(++counter);
    const std::string out_file = "cli_stdout_" + tag + ".txt";
    const std::string err_file = "cli_stderr_" + tag + ".txt";
    const std::string cmd = std::string(GFBM_CLI_PATH) + " " + args + " >" + out_file +
                            " 2>" + err_file;
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return result;
}

}  // namespace

TEST_CASE("simulate is byte-identical across runs and methods are distinct") {
    const std::string flags =
        "simulate --a 1 --b 1 --hurst 0.75 --t-max 1 --points 64 --paths 3 --seed 42";
    auto first = run_cli(flags + " --method circulant");
    auto second = run_cli(flags + " --method circulant");
    CHECK(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.rfind("# gfbm a=1 b=1 H=0.75 seed=42 method=circulant\n", 0) == 0);
    CHECK(first.err.find("embedding_size") != std::string::npos);

    auto chol = run_cli(flags + " --method cholesky");
    CHECK(chol.exit_code == 0);
    CHECK(chol.out != first.out);  // same law, different draw path
    CHECK(chol.err.find("jitter") != std::string::npos);
}

TEST_CASE("table subcommand prints closed-form values") {
    auto var = run_cli("table --a 1 --b 0 --hurst 0.5 --what var --t 1");
    CHECK(var.exit_code == 0);
    CHECK(var.out == "t,variance\n1,1\n");

    auto bounds = run_cli("table --a 1 --b 1 --hurst 0.75 --what bounds");
    CHECK(bounds.exit_code == 0);
    CHECK(bounds.out.find("regime,lower,upper\nC,") == 0);

    auto rz = run_cli("table --a 1 --b 1 --hurst 0.75 --what rz --p 1 --n-max 5");
    CHECK(rz.exit_code == 0);
    // header + 5 rows
    int lines = 0;
    for (char c : rz.out) lines += c == '\n';
    CHECK(lines == 6);
    CHECK(rz.out.find("0.4519348145406") != std::string::npos);

    auto bad = run_cli("table --a 1 --b 0 --hurst 0.5 --what nope");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("simulate --a 1 --b 0 --hurst 0.5 --points 4").exit_code == 2);  // no seed
    CHECK(run_cli("simulate --a 0 --b 0 --hurst 0.5 --seed 1").exit_code == 2);
    CHECK(run_cli("simulate --a 1 --b 0 --hurst 1.5 --seed 1").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    // Over the dense-method cap: refused as usage, pointing at the other method.
    auto cap = run_cli(
        "simulate --a 1 --b 0 --hurst 0.5 --points 10000 --seed 1 --method cholesky");
    CHECK(cap.exit_code == 2);
    CHECK(cap.err.find("4096") != std::string::npos);
}

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("simulate --help").exit_code == 0);
}

TEST_CASE("verify runs, reports JSON, and honors check selection") {
    auto ok = run_cli(
        "verify --a 1 --b 1 --hurst 0.75 --seed 7 --paths 2000 --pairs 500 "
        "--triples 40 --lrd-n-max 100000 --hurst-paths 8 --hurst-points 1024");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("\"schema_version\": \"1\"") != std::string::npos);
    CHECK(ok.err.find("PASS covariance_cholesky") != std::string::npos);

    auto sel = run_cli(
        "verify --a 1 --b 1 --hurst 0.75 --seed 7 --checks markov,lrd "
        "--triples 40 --lrd-n-max 100000");
    CHECK(sel.exit_code == 0);
    CHECK(sel.out.find("covariance") == std::string::npos);
    CHECK(sel.out.find("\"name\": \"markov\"") != std::string::npos);

    auto empty = run_cli("verify --a 1 --b 1 --hurst 0.75 --seed 7 --checks ' '");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out == "[]\n");
    CHECK(empty.err.find("nothing to run") != std::string::npos);

    auto unknown = run_cli("verify --a 1 --b 1 --hurst 0.75 --seed 7 --checks bogus");
    CHECK(unknown.exit_code == 2);

    auto inject = run_cli(
        "verify --a 1 --b 1 --hurst 0.75 --seed 7 --paths 2000 "
        "--checks covariance_cholesky --inject-mismatch");
    CHECK(inject.exit_code == 1);
    CHECK(inject.out.find("\"passed\": false") != std::string::npos);
    CHECK(inject.out.find("\"mismatch_injected\": \"true\"") != std::string::npos);
}

TEST_CASE("analyze reads simulate output and reports estimates") {
    const std::string csv = "cli_analyze_input.csv";
    auto sim = run_cli(
        "simulate --a 1 --b 0 --hurst 0.3 --t-max 1 --points 512 --paths 4 "
        "--seed 99 --method circulant -o " + csv);
    REQUIRE(sim.exit_code == 0);

    auto ana = run_cli("analyze " + csv + " --bins 32");
    CHECK(ana.exit_code == 0);
    CHECK(ana.out.find("\"hurst\"") != std::string::npos);
    CHECK(ana.out.find("\"local_time\"") != std::string::npos);
    CHECK(ana.out.find("\"difference_quotient\"") != std::string::npos);

    // Malformed file: parse error with position, exit 2.
    const std::string bad = "cli_analyze_bad.csv";
    {
        std::ofstream out(bad);
        out << "# gfbm a=1 b=0 H=0.5 seed=1 method=cholesky\n"
               "t,path_0\n0,0\nnope,1\n";
    }
    auto broken = run_cli("analyze " + bad);
    CHECK(broken.exit_code == 2);
    CHECK(broken.err.find("line 4") != std::string::npos);

    auto missing = run_cli("analyze no_such_file.csv");
    CHECK(missing.exit_code == 2);

    std::remove(csv.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("analyze flags degenerate constant paths instead of crashing") {
    const std::string csv = "cli_flat_input.csv";
    {
        std::ofstream out(csv);
        out << "# gfbm a=1 b=0 H=0.5 seed=1 method=cholesky\n";
        out << "t,path_0\n";
        out << std::setprecision(17);
        const int n = 300;
        for (int k = 0; k <= n; ++k)
            out << (k / static_cast<double>(n)) << ",0\n";
    }
    auto ana = run_cli("analyze " + csv + " --bins 16");
    CHECK(ana.exit_code == 0);
    CHECK(ana.out.find("\"degenerate_paths\": 1") != std::string::npos);
    CHECK(ana.err.find("constant") != std::string::npos);
    std::remove(csv.c_str());
}
