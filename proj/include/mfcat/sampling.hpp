#pragma once

// Seeded generators for property suites. Every generator is deterministic in
// its random engine, and every object it returns has been validated.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mfcat/factorization.hpp"

namespace mfcat {

using Rng = std::mt19937_64;

// Random polynomial in `vars` with total degree <= max_degree, at most
// max_terms terms and integer coefficients in [-coeff_bound, coeff_bound].
Polynomial random_polynomial(Rng& rng, const std::vector<std::string>& vars,
                             unsigned max_degree, unsigned max_terms, int coeff_bound = 3);

PolyMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                         const std::vector<std::string>& vars, unsigned max_degree);

struct ElementaryOp {
  enum class Kind { Transvection, Swap, Negate };
  Kind kind;
  std::size_t i;
  std::size_t j;           // unused for Negate
  Polynomial multiplier;   // Transvection only: row i += multiplier * row j
};

// (M, M^-1) for M = E_k ... E_1, where ops lists E_1 first.
MatrixFactorization elementary_mf1(std::size_t size, const std::vector<ElementaryOp>& ops);

MatrixFactorization random_mf1(Rng& rng, std::size_t size, std::size_t num_elementary);
MatrixFactorization random_mf1(std::uint64_t seed, std::size_t size, std::size_t num_elementary);

// A factorization of a random potential f in x, y, z of degree <= 2 and size
// <= max_size: phi = A diag(p) B, psi = B^-1 diag(q) A^-1 with p_i q_i = f.
MatrixFactorization random_mf(Rng& rng, std::size_t max_size = 3);

// A random morphism between two MF(1) objects: beta = psi2 * delta * phi1.
MfMorphism random_mf1_morphism(Rng& rng, const MatrixFactorization& source,
                               const MatrixFactorization& target);

// A random (1,0) sub-permutation morphism e^m -> e^p.
MfMorphism random_t_morphism(Rng& rng, unsigned m, unsigned p);

}  // namespace mfcat
