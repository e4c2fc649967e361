#pragma once

#include "mfcat/factorization.hpp"
#include "mfcat/report.hpp"

namespace mfcat {

// Yoshino product: a factorization of f + g of size 2nm with
//   phi = [[phi (x) I_m, I_n (x) phi'], [-I_n (x) psi', psi (x) I_m]]
//   psi = [[psi (x) I_m, -I_n (x) phi'], [I_n (x) psi', phi (x) I_m]]
MatrixFactorization yoshino_tensor(const MatrixFactorization& x, const MatrixFactorization& y);

// Multiplicative product: ((phi (x) phi') + (phi (x) phi'), (psi (x) psi') + (psi (x) psi'))
// as direct sums, a factorization of f * g of size 2nm.
MatrixFactorization mult_tensor(const MatrixFactorization& x, const MatrixFactorization& y);

// z (x) Y with blocks alpha (x) I_m and beta (x) I_m.
MfMorphism mult_tensor_morph_left(const MfMorphism& z, const MatrixFactorization& y);
// X (x) z with blocks I_n (x) alpha and I_n (x) beta.
MfMorphism mult_tensor_morph_right(const MatrixFactorization& x, const MfMorphism& z);
// zf (x) zg with blocks alpha_f (x) alpha_g and beta_f (x) beta_g.
MfMorphism mult_tensor_morph_pair(const MfMorphism& zf, const MfMorphism& zg);

// Omega(X (x) Y) == Omega(X) (x) Omega(Y), literally.
CheckReport check_syzygy_identity(const MatrixFactorization& x, const MatrixFactorization& y);

// X (x) Y != Omega(X) (x) Omega(Y) and Omega(X) (x) Y != X (x) Omega(Y), as
// literal matrix inequalities (no isomorphism test); the report is flagged
// literal_only. Symmetric inputs (phi == psi on both sides) give Info.
CheckReport check_syzygy_inequalities(const MatrixFactorization& x, const MatrixFactorization& y);

}  // namespace mfcat
