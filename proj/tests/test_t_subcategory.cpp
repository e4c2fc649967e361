#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "mfcat/error.hpp"
#include "mfcat/sampling.hpp"
#include "mfcat/t_subcategory.hpp"
#include "mfcat/tensor.hpp"
#include "support.hpp"

using namespace mfcat;
using support::M;

TEST_CASE("e-powers") {
  CHECK(e_power(1).phi() == M("[[1]]"));
  CHECK(e_power(2).phi() == PolyMatrix::identity(2));
  CHECK(e_power(3).psi() == PolyMatrix::identity(4));
  for (unsigned n = 1; n <= 8; ++n) {
    CHECK(e_power(n).size() == (std::size_t{1} << (n - 1)));
    CHECK(e_power(n + 1) == mult_tensor(unit_e(), e_power(n)));
    CHECK(is_e_power(e_power(n)));
  }
  CHECK_THROWS_AS(e_power(0), Error);
  CHECK_THROWS_AS(e_power(40), Error);
  CHECK_FALSE(is_e_power(random_mf1(std::uint64_t{1}, 2, 3)));
}

TEST_CASE("T-morphism predicate") {
  const auto e = e_power(1), e2 = e_power(2);
  CHECK(is_t_morphism(MfMorphism::make(e, e2, M("[[1], [0]]"), M("[[1], [0]]"))));
  // alpha != beta; between e-powers such a pair is still a valid MF(1) morphism.
  const auto skew = MfMorphism::make(e2, e2, M("[[1, 0], [0, 0]]"), M("[[1, 0], [0, 0]]"));
  CHECK(is_t_morphism(skew));
  const auto x = random_mf1(std::uint64_t{5}, 2, 3);
  CHECK_FALSE(is_t_morphism(MfMorphism::identity(x)));
  CHECK_FALSE(is_t_morphism(MfMorphism::make(e, e, M("[[2]]"), M("[[2]]"))));
}

TEST_CASE("connecting morphisms") {
  CHECK(connecting_morphism(2, 1).alpha() == M("[[1, 0]]"));
  CHECK(connecting_morphism(1, 2).alpha() == M("[[1], [0]]"));
  CHECK(connecting_morphism(3, 3).alpha() == PolyMatrix::identity(4));
  for (unsigned m = 1; m <= 6; ++m)
    for (unsigned p = 1; p <= 6; ++p) {
      const auto z = connecting_morphism(m, p);
      CHECK(is_t_morphism(z));
      CHECK_FALSE(z.alpha().is_zero());
    }
}

TEST_CASE("composition closure in T") {
  Rng rng(8);
  std::uniform_int_distribution<unsigned> exp(1, 4);
  for (int i = 0; i < 500; ++i) {
    const unsigned a = exp(rng), b = exp(rng), c = exp(rng);
    const auto f = random_t_morphism(rng, a, b), g = random_t_morphism(rng, b, c);
    CHECK(is_t_morphism(g));
    CHECK(is_t_morphism(compose(g, f)));
  }
}

TEST_CASE("canonical transformations") {
  const auto e = e_power(1);
  CHECK(gamma(e).alpha() == M("[[1], [0]]"));
  CHECK(gamma(e_power(2)).alpha() == PolyMatrix::padded_identity(2, 2, false));
  CHECK(lambda_(e).alpha() == M("[[1, 0]]"));
  CHECK(rho(e) == lambda_(e));
  CHECK(l_iso(e).alpha() == PolyMatrix::identity(2));
  CHECK(compose(l_iso(e), l_iso(e)) == MfMorphism::identity(e_power(2)));

  const auto a = MatrixFactorization::make(M("[[4, 3], [1, 1]]"), M("[[1, -3], [-1, 4]]"),
                                           Polynomial(1));
  CHECK_NOTHROW(gamma(a));
  CHECK(mult_tensor(a, e) == mult_tensor(e, a));
  CHECK(rho(a).alpha() == PolyMatrix::padded_identity(2, 2, true));
  CHECK(compose(lambda_(a), gamma(a)) == MfMorphism::identity(a));
  const auto back = compose(gamma(a), lambda_(a));
  CHECK_FALSE(back == MfMorphism::identity(mult_tensor(e, a)));
  CHECK(back.alpha() == direct_sum(PolyMatrix::identity(2), PolyMatrix(2, 2)));

  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_mf1(rng, 1 + i % 3, 4), y = random_mf1(rng, 1 + (i + 1) % 3, 4);
    CHECK(compose(lambda_(x), gamma(x)) == MfMorphism::identity(x));
    const auto mu = random_mf1_morphism(rng, x, y);
    CHECK(mult_tensor_morph_right(e, mu) == mult_tensor_morph_left(mu, e));
    CHECK(compose(mult_tensor_morph_right(e, mu), gamma(x)) == compose(gamma(y), mu));
  }
}

TEST_CASE("gamma naturality on T") {
  Rng rng(13);
  std::uniform_int_distribution<unsigned> exp(1, 4);
  for (int i = 0; i < 100; ++i) {
    const unsigned p = exp(rng), q = exp(rng);
    const auto mu = random_t_morphism(rng, p, q);
    CHECK(compose(mult_tensor_morph_right(unit_e(), mu), gamma(e_power(p))) ==
          compose(gamma(e_power(q)), mu));
  }
}

TEST_CASE("associator") {
  const auto e = e_power(1);
  CHECK(associator(e, e, e) == MfMorphism::identity(e_power(3)));
  CHECK(associator(e_power(2), e, e_power(2)).alpha() == PolyMatrix::identity(16));
  const auto a = MatrixFactorization::make(M("[[4, 3], [1, 1]]"), M("[[1, -3], [-1, 4]]"),
                                           Polynomial(1));
  // First object non-scalar: the two bracketings differ literally.
  try {
    associator(a, e_power(2), e);
    FAIL("no throw");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::AssociativityMismatch);
  }
  CHECK_NOTHROW(associator(e, a, e_power(2)));
  CHECK_NOTHROW(associator(e_power(2), a, a));
}

TEST_CASE("permutation witness") {
  const auto a = direct_sum(M("[[1], [0]]"), M("[[1], [0]]"));
  const auto b = PolyMatrix::padded_identity(2, 2, false);
  const auto p = find_permutation_witness(a, b);
  // Rows (1, 3, 2, 4) of a become rows (1, 2, 3, 4) of b.
  CHECK(p == M("[[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]"));
  CHECK(p * a == b);
  CHECK(is_permutation_matrix(p));
  CHECK(p * p.transpose() == PolyMatrix::identity(4));
  CHECK(find_permutation_witness(b, b) == PolyMatrix::identity(4));
  CHECK_THROWS_AS(find_permutation_witness(PolyMatrix(4, 2), b), Error);
  CHECK_THROWS_AS(find_permutation_witness(M("[[2]]"), M("[[1]]")), Error);

  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const auto s = random_t_morphism(rng, 3, 4).alpha();
    std::vector<std::size_t> perm(s.rows());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<PolyMatrix::Triplet> t;
    for (std::size_t r = 0; r < perm.size(); ++r) t.push_back({r, perm[r], Polynomial(1)});
    const auto q = PolyMatrix::from_entries(perm.size(), perm.size(), t);
    const auto w = find_permutation_witness(s, q * s);
    CHECK(is_permutation_matrix(w));
    CHECK(w * s == q * s);
    CHECK(w * w.transpose() == PolyMatrix::identity(w.rows()));
  }
}
