#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "pascalforms/cli.hpp"
#include "pascalforms/io.hpp"
#include "pascalforms/pascal.hpp"

using namespace pascalforms;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen prints the pascal matrix as CSV") {
  const CliResult r = run_cli({"gen", "--family", "pascal", "--n", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,0,0,0,0\n1,1,0,0,0\n1,2,1,0,0\n1,3,3,1,0\n1,4,6,4,1\n");
}

TEST_CASE("gen output re-parses to the same matrix") {
  for (const std::string& format : {"csv", "text"}) {
    const CliResult r = run_cli({"gen", "--family", "G", "--n", "6", "--r", "2",
                                 "--format", format});
    REQUIRE(r.code == 0);
    std::istringstream is(r.out);
    const IntMatrix parsed = format == "csv" ? read_csv(is) : read_text(is);
    CHECK(matrix_equal(parsed, g_matrix(6, 2)));
  }
}

TEST_CASE("gen covers every family") {
  for (const std::string& family :
       {"pascal", "stirling-partition", "stirling-cycle", "bidiagonal"}) {
    CHECK(run_cli({"gen", "--family", family, "--n", "4"}).code == 0);
  }
  for (const std::string& family : {"F", "G", "H", "D", "pascal-minus-i-power"}) {
    CHECK(run_cli({"gen", "--family", family, "--n", "5", "--r", "2"}).code == 0);
  }
  CHECK(run_cli({"gen", "--family", "generalized", "--n", "5", "--seq", "sets"}).code == 0);
  CHECK(run_cli({"gen", "--family", "generalized", "--n", "4", "--seq", "0,1,1,1"}).code == 0);
  CHECK(run_cli({"gen", "--family", "generalized", "--n", "6", "--seq",
                 "stirling-partition:2"}).code == 0);
}

TEST_CASE("gen with a literal sets sequence equals P - I") {
  const CliResult r = run_cli({"gen", "--family", "generalized", "--n", "5", "--seq",
                               "0,1,1,1,1"});
  REQUIRE(r.code == 0);
  std::istringstream is(r.out);
  CHECK(matrix_equal(read_csv(is), IntMatrix(pascal(5) - IntMatrix::Identity(5, 5))));
}

TEST_CASE("gen usage errors exit 2") {
  CHECK(run_cli({"gen", "--family", "F", "--n", "5"}).code == 2);          // missing --r
  CHECK(run_cli({"gen", "--family", "nosuch", "--n", "5"}).code == 2);     // unknown family
  CHECK(run_cli({"gen", "--family", "pascal"}).code == 2);                 // missing --n
  CHECK(run_cli({"gen", "--family", "pascal", "--n", "0"}).code == 2);     // bad dimension
  CHECK(run_cli({"gen", "--family", "G", "--n", "5", "--r", "9"}).code == 2);
  CHECK(!run_cli({"gen", "--family", "nosuch", "--n", "5"}).err.empty());
}

TEST_CASE("snf prints the smith diagonal") {
  const CliResult r = run_cli({"snf", "--family", "pascal-minus-i-power", "--n", "6",
                               "--r", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "diag: 2 2 12 60 0 0\n");
}

TEST_CASE("snf --certify prints transforms and re-verifies") {
  const CliResult r = run_cli({"snf", "--family", "pascal-minus-i-power", "--n", "5",
                               "--r", "1", "--certify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("diag: 1 1 2 12 0\n") == 0);
  CHECK(r.out.find("U:\n") != std::string::npos);
  CHECK(r.out.find("V:\n") != std::string::npos);
  CHECK(r.out.find("verified: true\n") != std::string::npos);
}

TEST_CASE("jordan prints block sizes") {
  const CliResult r = run_cli({"jordan", "--n", "5", "--mod", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "blocks: 2 2 1 (eigenvalue 1)\n");
  CHECK(run_cli({"jordan", "--n", "5", "--mod", "4"}).code == 2);  // non-prime modulus
}

TEST_CASE("verify emits one line per check and exits by outcome") {
  const CliResult r = run_cli({"verify", "--identity", "all", "--n-max", "6"});
  CHECK(r.code == 0);
  long lines = 0, passed = 0;
  std::istringstream is(r.out);
  std::string line;
  while (std::getline(is, line)) {
    ++lines;
    if (line.find("passed=true") != std::string::npos) ++passed;
  }
  // 6 each for identities 1 and 2, 15 each for identities 3 and 4
  CHECK(lines == 42);
  CHECK(passed == 42);
}

TEST_CASE("verify can include the other checks") {
  const CliResult r = run_cli({"verify", "--identity", "1", "--n-max", "4", "--theorem2",
                               "--closed-form", "--convolution", "--trials", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("check=theorem2") != std::string::npos);
  CHECK(r.out.find("check=closed-form") != std::string::npos);
  CHECK(r.out.find("check=convolution") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::vector<std::string> args = {"verify", "--identity", "2", "--n-max", "5",
                                         "--convolution", "--trials", "7"};
  CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("oracle reports the three counts") {
  const CliResult r = run_cli({"oracle", "--n", "3", "--m", "1", "--r", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "left: 9\nright: 9\nenumerated: 9\nagree: true\n");
  CHECK(run_cli({"oracle", "--n", "12", "--m", "1", "--r", "1"}).code == 2);  // over the bound
}

TEST_CASE("explore prints one informational line per dimension") {
  const CliResult r = run_cli({"explore", "--kind", "stirling-cycle", "--r", "1",
                               "--n-max", "6"});
  CHECK(r.code == 0);
  long lines = 0;
  std::istringstream is(r.out);
  std::string line;
  while (std::getline(is, line)) {
    ++lines;
    CHECK(line.find("check=explore-stirling-cycle") == 0);
  }
  CHECK(lines == 5);  // n = 2..6
}

TEST_CASE("top-level usage errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"gen", "--bogus-flag", "1"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}
