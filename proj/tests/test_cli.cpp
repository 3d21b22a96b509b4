// Golden-file and contract tests for the command line tool. The golden
// outputs are regenerated only by running this binary with
// FSE_UPDATE_GOLDEN=1 in the environment.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>
#include <cmath>

#include "doctest.h"

#ifndef FSE_CLI_PATH
#define FSE_CLI_PATH "fse"
#endif
#ifndef FSE_GOLDEN_DIR
#define FSE_GOLDEN_DIR "golden"
#endif

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE_MESSAGE(bool(f), "cannot open " << path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool update_mode() { return std::getenv("FSE_UPDATE_GOLDEN") != nullptr; }

int run_cli(const std::string& args, const std::string& stdout_path) {
    std::string cmd = std::string(FSE_CLI_PATH) + " " + args + " > " + stdout_path +
                      " 2> " + stdout_path + ".err";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

void check_against_golden(const std::string& produced, const std::string& golden_name) {
    std::string golden_path = std::string(FSE_GOLDEN_DIR) + "/" + golden_name;
    if (update_mode()) {
        std::ofstream g(golden_path, std::ios::binary | std::ios::trunc);
        g << produced;
        return;
    }
    CHECK_MESSAGE(produced == slurp(golden_path), "output differs from " << golden_name);
}

} // namespace

TEST_CASE("golden: ml stdout line") {
    int rc = run_cli("ml --alpha 0.5 --beta 1 --z 0.7", "/tmp/fse_ml.out");
    CHECK(rc == 0);
    check_against_golden(slurp("/tmp/fse_ml.out"), "ml.txt");
}

TEST_CASE("golden: free field CSV, byte-identical across runs") {
    const std::string args =
        "free --nu 1 --k-center 0 --sigma-k 1 --t-min 0 --t-max 1 --nt 3 "
        "--x-min -2 --x-max 2 --nx 5 --k-min -10 --k-max 10 --nk 101 --output /tmp/fse_free.csv";
    CHECK(run_cli(args, "/tmp/fse_free.stdout") == 0);
    std::string first = slurp("/tmp/fse_free.csv");
    CHECK(run_cli(args, "/tmp/fse_free.stdout") == 0);
    CHECK(first == slurp("/tmp/fse_free.csv"));
    check_against_golden(first, "free.csv");
}

TEST_CASE("golden: well field CSV") {
    const std::string args =
        "well --nu 0.5 --width 2 --modes 1:1,2:0.5 --t-min 0 --t-max 1 --nt 3 --nx 5 "
        "--output /tmp/fse_well.csv";
    CHECK(run_cli(args, "/tmp/fse_well.stdout") == 0);
    check_against_golden(slurp("/tmp/fse_well.csv"), "well.csv");
}

TEST_CASE("golden: green kernel table spans both time signs") {
    const std::string args =
        "green --kind wheeler --nu 1 --t-min -1 --t-max 1 --nt 5 --k-min 0 --k-max 2 --nk 3 "
        "--output /tmp/fse_green.csv";
    CHECK(run_cli(args, "/tmp/fse_green.stdout") == 0);
    check_against_golden(slurp("/tmp/fse_green.csv"), "green.csv");
}

TEST_CASE("golden: fracderiv sample table") {
    const std::string args =
        "fracderiv --lambda 0.5 --x-min -8 --x-max 8 --nx 17 --k-min -6 --k-max 6 --nk 25 "
        "--output /tmp/fse_fd.csv";
    CHECK(run_cli(args, "/tmp/fse_fd.stdout") == 0);
    check_against_golden(slurp("/tmp/fse_fd.csv"), "fracderiv.csv");
}

TEST_CASE("golden: free field JSON mirror") {
    const std::string args =
        "free --nu 1 --nt 2 --t-max 0.5 --x-min -1 --x-max 1 --nx 3 --k-min -10 --k-max 10 "
        "--nk 81 --format json --output /tmp/fse_free.json";
    CHECK(run_cli(args, "/tmp/fse_free.stdout") == 0);
    check_against_golden(slurp("/tmp/fse_free.json"), "free.json");
}

TEST_CASE("exit codes: usage, numerical, success") {
    CHECK(run_cli("free --no-such-flag 1", "/tmp/fse_rc.out") == 2);
    CHECK(run_cli("ml --nu-re 0", "/tmp/fse_rc.out") == 2);
    CHECK(run_cli("nosuchcommand", "/tmp/fse_rc.out") == 2);
    // budget exceeded for complex alpha at extreme argument: numerical failure
    CHECK(run_cli("ml --alpha-re 0.3 --alpha-im 0.4 --z -1e9", "/tmp/fse_rc.out") == 1);
    CHECK(run_cli("ml --alpha 1 --beta 1 --z 1", "/tmp/fse_rc.out") == 0);
}

TEST_CASE("config file: flags override, unknown keys rejected, file values apply") {
    {
        std::ofstream f("/tmp/fse_cfg.json");
        f << "{\"nu_re\": 2.0, \"nt\": 4, \"nx\": 3}\n";
    }
    int rc = run_cli("well --config /tmp/fse_cfg.json --nu 1 --nt 2", "/tmp/fse_cfg.out");
    CHECK(rc == 0);
    std::string err = slurp("/tmp/fse_cfg.out.err");
    CHECK(err.find("\"nu_re\":1.0") != std::string::npos); // flag wins
    CHECK(err.find("\"nt\":2") != std::string::npos);      // flag wins
    CHECK(err.find("\"nx\":3") != std::string::npos);      // file fills the rest

    {
        std::ofstream f("/tmp/fse_cfg_bad.json");
        f << "{\"does_not_exist\": 1}\n";
    }
    CHECK(run_cli("well --config /tmp/fse_cfg_bad.json", "/tmp/fse_cfg.out") == 2);
}

namespace {

// parse a CSV payload into rows of doubles, skipping the header
std::vector<std::vector<double>> parse_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream ss(text);
    std::string line;
    bool first = true;
    while (std::getline(ss, line)) {
        if (first || line.empty()) {
            first = false;
            continue;
        }
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

} // namespace

TEST_CASE("wheeler output equals half the retarded output on t > 0 rows") {
    const std::string grid = "--nu 1 --t-min -1 --t-max 1 --nt 5 --k-min 0 --k-max 2 --nk 3 ";
    CHECK(run_cli("green --kind wheeler " + grid + "--output /tmp/fse_gw.csv", "/tmp/o") == 0);
    CHECK(run_cli("green --kind retarded " + grid + "--output /tmp/fse_gr.csv", "/tmp/o") == 0);
    auto wheeler = parse_csv(slurp("/tmp/fse_gw.csv"));
    auto retarded = parse_csv(slurp("/tmp/fse_gr.csv"));
    REQUIRE(wheeler.size() == retarded.size());
    for (std::size_t i = 0; i < wheeler.size(); ++i) {
        if (wheeler[i][0] <= 0.0) continue; // t column
        CHECK(wheeler[i][2] == doctest::Approx(0.5 * retarded[i][2]).epsilon(1e-14));
        CHECK(wheeler[i][3] == doctest::Approx(0.5 * retarded[i][3]).epsilon(1e-14));
    }
}

TEST_CASE("well single mode at t = 0 reproduces sin(x) samples") {
    CHECK(run_cli("well --nu 1 --width 3.141592653589793 --modes 1:1 --t-min 0 --t-max 1 "
                  "--nt 2 --nx 9 --output /tmp/fse_wsin.csv",
                  "/tmp/o") == 0);
    auto rows = parse_csv(slurp("/tmp/fse_wsin.csv"));
    int checked = 0;
    for (const auto& row : rows) {
        if (row[0] != 0.0) continue;
        CHECK(std::abs(row[2] - std::sin(row[1])) <= 1e-12);
        CHECK(std::abs(row[3]) <= 1e-12);
        ++checked;
    }
    CHECK(checked == 9);
}
