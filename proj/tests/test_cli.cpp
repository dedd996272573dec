// End-to-end checks of the command-line tool: runs the real binary (path
// injected by the build) and inspects CSV output, exit codes, determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "caputo/eit.hpp"
#include "doctest.h"

namespace {

const std::string kCli = CAPUTO_CLI_BINARY;

int run(const std::string& args) {
    const std::string cmd = "\"" + kCli + "\" " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -2;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::istringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
}

}  // namespace

TEST_CASE("eval emits a correct closed-form value") {
    REQUIRE(run("eval -f sinh --method closed-form -a 0.5 --x-start 1 -o cli_eval.csv") == 0);
    const auto lines = lines_of(slurp("cli_eval.csv"));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "x,alpha,value,terms_used,last_term,converged");
    const auto cells = split_csv(lines[1]);
    REQUIRE(cells.size() == 6);
    CHECK(std::stod(cells[0]) == 1.0);
    CHECK(std::stod(cells[1]) == 0.5);
    CHECK(std::stod(cells[2]) ==
          doctest::Approx(caputo::caputo_sinh(1.0, 0.5, 1.0)).epsilon(1e-15));
}

TEST_CASE("sweep is an alias of eval") {
    REQUIRE(run("eval -f exp --method series -a 0.25 -a 0.75 --x-start 0.5 --x-stop 1.5 "
                "--x-count 3 -o cli_a.csv") == 0);
    REQUIRE(run("sweep -f exp --method series -a 0.25 -a 0.75 --x-start 0.5 --x-stop 1.5 "
                "--x-count 3 -o cli_b.csv") == 0);
    const std::string a = slurp("cli_a.csv");
    CHECK(a == slurp("cli_b.csv"));
    // Grid is x-major: 3 x-values times 2 orders plus the header.
    CHECK(lines_of(a).size() == 7);
}

TEST_CASE("compare exits cleanly when routes agree") {
    REQUIRE(run("compare -f sinh --method quadrature --method closed-form -a 0.25 -a 0.75 "
                "--x-start 0.5 --x-stop 2 --x-count 4 --tol 1e-8 -o cli_cmp.csv") == 0);
    const auto lines = lines_of(slurp("cli_cmp.csv"));
    REQUIRE(lines.size() == 9);
    CHECK(lines[0] == "x,alpha,value_quadrature,value_closed-form,max_pairwise_diff");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split_csv(lines[i]);
        REQUIRE(cells.size() == 5);
        CHECK(std::stod(cells[4]) <= 1e-8);
    }
}

TEST_CASE("compare signals disagreement past the threshold") {
    // A four-term truncation cannot track the quadrature to 1e-12.
    CHECK(run("compare -f tanh --method quadrature --method series -a 0.5 --x-start 1.5 "
              "--terms 4 --tol 1e-12 -o cli_bad.csv") == 1);
}

TEST_CASE("bad inputs exit with the usage status") {
    CHECK(run("eval -f nosuch --method series -a 0.5 --x-start 1 -o /dev/null") == 3);
    CHECK(run("eval -f exp --method nosuch -a 0.5 --x-start 1 -o /dev/null") == 3);
    CHECK(run("eval -f exp --method closed-form -a 0.5 --x-start 1 -o /dev/null") == 3);
    CHECK(run("eval -f exp --method series -a 1.5 --x-start 1 -o /dev/null") == 3);
    CHECK(run("eval -f exp --method series -a 0.5 --x-start -1 -o /dev/null") == 3);
    // Missing required flags are caught by the parser (nonzero, not a crash).
    CHECK(run("eval -f exp --method series -o /dev/null") != 0);
    CHECK(run("") != 0);
}

TEST_CASE("strict mode flags non-finite values") {
    // exp at x = 700 overflows the expansion terms.
    CHECK(run("eval -f exp --method series -a 0.5 --x-start 700 --strict -o /dev/null") == 2);
    CHECK(run("eval -f exp --method series -a 0.5 --x-start 700 -o /dev/null") == 0);
}

TEST_CASE("fixed table: deterministic bytes and exact endpoint columns") {
    REQUIRE(run("fig1 -o cli_fig_a.csv") == 0);
    REQUIRE(run("fig1 -o cli_fig_b.csv --plot-script cli_fig.gp") == 0);
    const std::string a = slurp("cli_fig_a.csv");
    CHECK(a == slurp("cli_fig_b.csv"));
    const auto lines = lines_of(a);
    REQUIRE(lines.size() == 201);
    CHECK(lines[0] == "x,alpha_0,alpha_0.25,alpha_0.5,alpha_0.75,alpha_1");
    // Row k: x = 4k/200; order-0 column is tanh(x), order-1 is sech^2(x).
    for (std::size_t i : {std::size_t(1), std::size_t(100), std::size_t(200)}) {
        const auto cells = split_csv(lines[i]);
        REQUIRE(cells.size() == 6);
        const double x = std::stod(cells[0]);
        CHECK(x == doctest::Approx(4.0 * double(i) / 200.0).epsilon(1e-15));
        CHECK(std::stod(cells[1]) == doctest::Approx(std::tanh(x)).epsilon(1e-15));
        const double sc = 1.0 / std::cosh(x);
        CHECK(std::stod(cells[5]) == doctest::Approx(sc * sc).epsilon(1e-15));
    }
    // The plot script references the CSV it was generated alongside.
    CHECK(slurp("cli_fig.gp").find("cli_fig_b.csv") != std::string::npos);
}
