#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli_support.hpp"

TEST_CASE("shipped samples round-trip") {
  for (const char* s : {"intro.mf", "e.mf", "remark.mf"}) {
    INFO(s);
    CHECK(cli::round_trips(s));
  }
}

TEST_CASE("tensor, syzygy and epower") {
  const std::string dir = MFCAT_SAMPLES;
  const auto out = cli::scratch("tensor.mf");
  REQUIRE(cli::run("tensor --mode mult \"" + dir + "/intro.mf\" \"" + dir + "/e.mf\" -o \"" +
                   out.string() + "\"") == 0);
  CHECK(cli::run("validate \"" + out.string() + "\"") == 0);
  REQUIRE(cli::run("tensor --mode yoshino \"" + dir + "/intro.mf\" \"" + dir + "/remark.mf\" -o \"" +
                   out.string() + "\"") == 0);
  CHECK(cli::slurp(out).rfind("potential = x^2 + y^2 + 1\n", 0) == 0);
  CHECK(cli::run("syzygy \"" + dir + "/remark.mf\"") == 0);
  REQUIRE(cli::run("epower 3 -o \"" + out.string() + "\"") == 0);
  CHECK(cli::slurp(out) ==
        "potential = 1\n"
        "phi = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]\n"
        "psi = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]\n");
}

TEST_CASE("input errors exit with status 2") {
  const auto bad = cli::scratch("bad.mf");
  std::ofstream(bad) << "potential = x^2\nphi = [[x]]\npsi = [[y]]\n";
  CHECK(cli::run("validate \"" + bad.string() + "\"") == 2);
  CHECK(cli::run("validate /nonexistent/file.mf") == 2);
  CHECK(cli::run("epower 0") == 2);
  CHECK(cli::run("tensor --mode sideways a b") == 2);
  CHECK(cli::run("suite nonsense") == 2);
  CHECK(cli::run("frobnicate") == 2);
}

TEST_CASE("suite exit codes and formats") {
  CHECK(cli::run("suite counterexamples --format text") == 1);
  CHECK(cli::run("suite tensor --samples 5") == 0);
  const auto out = cli::scratch("report.json");
  cli::run("suite t-semiunital --maxpow 2 --format structured -o \"" + out.string() + "\"");
  CHECK(cli::slurp(out).find("\"aggregate\"") != std::string::npos);
}

TEST_CASE("suite all with defaults exits 0") {
  CHECK(cli::run("suite all") == 0);
}
