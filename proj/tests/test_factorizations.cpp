#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mfcat/error.hpp"
#include "mfcat/sampling.hpp"
#include "mfcat/t_subcategory.hpp"
#include "support.hpp"

using namespace mfcat;
using support::M;
using support::P;

TEST_CASE("validation") {
  const auto x = MatrixFactorization::make(M("[[x, -y], [y, x]]"), M("[[x, y], [-y, x]]"),
                                           P("x^2 + y^2"));
  CHECK(x.size() == 2);
  const auto e = MatrixFactorization::make(M("[[1]]"), M("[[1]]"), Polynomial(1));
  CHECK(e.size() == 1);
  try {
    MatrixFactorization::make(M("[[x]]"), M("[[x]]"), P("x"));
    FAIL("no throw");
  } catch (const ProductMismatch& err) {
    CHECK(err.row() == 0);
    CHECK(err.col() == 0);
  }
  try {
    MatrixFactorization::make(M("[[1, 0], [0, 1]]"), M("[[1, 0], [0, 2]]"), Polynomial(1));
    FAIL("no throw");
  } catch (const ProductMismatch& err) {
    CHECK(err.row() == 1);
    CHECK(err.col() == 1);
  }
  CHECK_THROWS_AS(MatrixFactorization::make(M("[[1, 0]]"), M("[[1, 0]]"), Polynomial(1)), Error);
  try {
    MatrixFactorization::make(M("[[1]]"), PolyMatrix::identity(2), Polynomial(1));
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::SizeMismatch);
  }
}

TEST_CASE("morphisms") {
  const auto e = e_power(1), e2 = e_power(2);
  const auto id = MfMorphism::make(e, e, M("[[1]]"), M("[[1]]"));
  CHECK(id == MfMorphism::identity(e));
  const auto z1 = MfMorphism::make(e, e2, M("[[1], [0]]"), M("[[1], [0]]"));
  const auto z2 = MfMorphism::make(e2, e, M("[[1, 0]]"), M("[[1, 0]]"));
  CHECK(compose(z2, z1) == MfMorphism::identity(e));
  const auto z12 = compose(z1, z2);
  CHECK(z12.alpha() == M("[[1, 0], [0, 0]]"));
  CHECK_FALSE(z12 == MfMorphism::identity(e2));
  CHECK(compose(MfMorphism::identity(e2), z1) == z1);
  CHECK(compose(MfMorphism::identity(e), MfMorphism::identity(e)) == MfMorphism::identity(e));
  CHECK_THROWS_AS(compose(z1, z1), Error);

  const auto x = elementary_mf1(2, {{ElementaryOp::Kind::Transvection, 0, 1, P("x")}});
  CHECK_THROWS_AS(MfMorphism::make(x, x, PolyMatrix::identity(2), PolyMatrix(2, 2)), SquareFailure);
  const auto f = MatrixFactorization::make(M("[[x]]"), M("[[x]]"), P("x^2"));
  try {
    MfMorphism::make(e, f, M("[[1]]"), M("[[1]]"));
    FAIL("no throw");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::PotentialMismatch);
  }
  try {
    MfMorphism::make(e, e2, M("[[1]]"), M("[[1]]"));
    FAIL("no throw");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::ShapeMismatch);
  }
  // The zero morphism is accepted.
  CHECK_NOTHROW(MfMorphism::make(x, x, PolyMatrix(2, 2), PolyMatrix(2, 2)));
}

TEST_CASE("syzygy and equality") {
  const auto x = MatrixFactorization::make(M("[[x, -y], [y, x]]"), M("[[x, y], [-y, x]]"),
                                           P("x^2 + y^2"));
  const auto o = syzygy(x);
  CHECK(o.phi() == x.psi());
  CHECK(o.psi() == x.phi());
  CHECK(syzygy(o) == x);
  CHECK_FALSE(o == x);
  CHECK(syzygy(e_power(1)) == e_power(1));
  CHECK(x == x);
  CHECK_FALSE(e_power(1) == e_power(2));
}

TEST_CASE("elementary MF(1) generator") {
  const auto id3 = elementary_mf1(3, {});
  CHECK(id3.phi() == PolyMatrix::identity(3));
  CHECK(id3.psi() == PolyMatrix::identity(3));
  const auto t = elementary_mf1(2, {{ElementaryOp::Kind::Transvection, 0, 1, P("x")}});
  CHECK(t.phi() == M("[[1, x], [0, 1]]"));
  CHECK(t.psi() == M("[[1, -x], [0, 1]]"));
  const auto r = random_mf1(std::uint64_t{42}, 2, 5);
  CHECK(r.potential().is_one());
  CHECK(r.size() == 2);
  CHECK(random_mf1(std::uint64_t{42}, 2, 5) == r);
}

TEST_CASE("composition is associative and unital on MF(1)") {
  Rng rng(17);
  std::uniform_int_distribution<std::size_t> size(1, 3);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_mf1(rng, size(rng), 3), b = random_mf1(rng, size(rng), 3);
    const auto c = random_mf1(rng, size(rng), 3), d = random_mf1(rng, size(rng), 3);
    const auto f = random_mf1_morphism(rng, a, b);
    const auto g = random_mf1_morphism(rng, b, c);
    const auto h = random_mf1_morphism(rng, c, d);
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    CHECK(compose(MfMorphism::identity(b), f) == f);
    CHECK(compose(f, MfMorphism::identity(a)) == f);
    CHECK(syzygy(syzygy(a)) == a);
  }
}

TEST_CASE("in MF(1) one square forces the other") {
  Rng rng(23);
  std::uniform_int_distribution<std::size_t> size(1, 3);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_mf1(rng, size(rng), 3), b = random_mf1(rng, size(rng), 3);
    const auto delta = random_matrix(rng, b.size(), a.size(), {"x", "y"}, 1);
    const auto beta = b.psi() * delta * a.phi();
    // First square: delta * phi_a == phi_b * beta.
    REQUIRE(delta * a.phi() == b.phi() * beta);
    CHECK_NOTHROW(MfMorphism::make(a, b, delta, beta));
  }
}

TEST_CASE("random factorizations of general potentials validate") {
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_mf(rng);
    CHECK(x.size() <= 3);
    CHECK(x.potential().total_degree() <= 2);
    CHECK(x.phi() * x.psi() == PolyMatrix::identity(x.size()).scaled(x.potential()));
  }
}
