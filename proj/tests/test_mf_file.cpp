#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfcat/error.hpp"
#include "mfcat/mf_file.hpp"
#include "mfcat/sampling.hpp"
#include "support.hpp"

using namespace mfcat;
using support::M;
using support::P;

namespace {

int parse_line(const std::string& text) {
  try {
    parse_mf_file(text);
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

}  // namespace

TEST_CASE("comments and multi-line matrices") {
  const auto x = parse_mf_file(
      "# sum of squares\n"
      "\n"
      "potential = x^2 + y^2   # trailing comment\n"
      "phi = [[x, -y],\n"
      "       [y, x]]\n"
      "psi = [[x, y], [-y, x]]\n");
  CHECK(x.potential() == P("x^2 + y^2"));
  CHECK(x.phi() == M("[[x, -y], [y, x]]"));
  CHECK(print_mf_file(x) == "potential = x^2 + y^2\nphi = [[x, -y], [y, x]]\npsi = [[x, y], [-y, x]]\n");
}

TEST_CASE("key order is free") {
  const auto x = parse_mf_file("psi = [[1]]\nphi = [[x]]\npotential = x\n");
  CHECK(x.phi() == M("[[x]]"));
}

TEST_CASE("errors carry line numbers") {
  CHECK(parse_line("potential = 1\nphi = [[1]]\n") == 3);
  CHECK(parse_line("potential = 1\nphi = [[1]]\nphi = [[1]]\npsi = [[1]]\n") == 3);
  CHECK(parse_line("potential = 1\nrho = [[1]]\n") == 2);
  CHECK(parse_line("potential = 1\nphi [[1]]\n") == 2);
  CHECK(parse_line("potential = 1\nphi = [[1, ]]\npsi = [[1]]\n") == 2);
  CHECK(parse_line("potential = 1 +\nphi = [[1]]\npsi = [[1]]\n") == 1);
  CHECK(parse_line("potential = 1\npsi = [[1]]\nphi = [[1],\n") >= 3);
  try {
    parse_mf_file("potential = x^2\nphi = [[x]]\npsi = [[y]]\n");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ProductMismatch);
  }
}

TEST_CASE("round trip on random factorizations") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_mf(rng);
    const auto text = print_mf_file(x);
    const auto y = parse_mf_file(text);
    CHECK(y == x);
    CHECK(print_mf_file(y) == text);
  }
}
