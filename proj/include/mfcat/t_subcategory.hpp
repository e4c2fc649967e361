#pragma once

// The subcategory T of MF(1): objects e^n = (I, I) of size 2^(n-1) and
// morphisms (Z, Z) with Z a (1,0) sub-permutation matrix; plus the canonical
// transformations of the multiplicative product.

#include "mfcat/factorization.hpp"

namespace mfcat {

// e^n = (I_{2^(n-1)}, I_{2^(n-1)}) of potential 1; n >= 1.
MatrixFactorization e_power(unsigned n);
inline MatrixFactorization unit_e() { return e_power(1); }

// True iff x is some e^n.
bool is_e_power(const MatrixFactorization& x);

// Source and target are e-powers, alpha == beta, and alpha is a (1,0)
// sub-permutation matrix.
bool is_t_morphism(const MfMorphism& m);

// e^m -> e^p: (I, 0) when m > p, (I, 0)^t when m < p, identity when m == p.
MfMorphism connecting_morphism(unsigned m, unsigned p);

// gamma_a : a -> e (x) a, both matrices (I_n, 0)^t.
MfMorphism gamma(const MatrixFactorization& a);
// lambda_a : e (x) a -> a, both matrices (I_n, 0).
MfMorphism lambda_(const MatrixFactorization& a);
// rho_a : a (x) e -> a, the same matrices as lambda_a.
MfMorphism rho(const MatrixFactorization& a);
// l_a : e (x) a -> a (x) e, the identity pair.
MfMorphism l_iso(const MatrixFactorization& a);

// Identity pair (a (x) b) (x) c -> a (x) (b (x) c). Throws
// Error(AssociativityMismatch) when the two bracketings are not literally
// equal, which happens as soon as phi_a is not a scalar matrix.
MfMorphism associator(const MatrixFactorization& a, const MatrixFactorization& b,
                      const MatrixFactorization& c);
// Identity pair a (x) (b (x) c) -> (a (x) b) (x) c, same conditions.
MfMorphism associator_inverse(const MatrixFactorization& a, const MatrixFactorization& b,
                              const MatrixFactorization& c);

// Permutation P with P * a == b, for same-shape sub-permutation (1,0)
// matrices. Rows carrying the 1 of each column are matched first, then the
// remaining rows in increasing order. Throws Error(NotEquivalent).
PolyMatrix find_permutation_witness(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace mfcat
