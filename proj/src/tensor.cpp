#include "mfcat/tensor.hpp"

namespace mfcat {

namespace {

PolyMatrix doubled(const PolyMatrix& m) { return direct_sum(m, m); }

}  // namespace

MatrixFactorization yoshino_tensor(const MatrixFactorization& x, const MatrixFactorization& y) {
  const std::size_t n = x.size(), m = y.size();
  check_size_guard(2 * n * m, 2 * n * m);
  const auto in = PolyMatrix::identity(n), im = PolyMatrix::identity(m);
  const auto phi_i = kronecker(x.phi(), im), psi_i = kronecker(x.psi(), im);
  const auto i_phi = kronecker(in, y.phi()), i_psi = kronecker(in, y.psi());
  return MatrixFactorization::make(block2x2(phi_i, i_phi, -i_psi, psi_i),
                                   block2x2(psi_i, -i_phi, i_psi, phi_i),
                                   x.potential() + y.potential());
}

MatrixFactorization mult_tensor(const MatrixFactorization& x, const MatrixFactorization& y) {
  check_size_guard(2 * x.size() * y.size(), 2 * x.size() * y.size());
  return MatrixFactorization::make(doubled(kronecker(x.phi(), y.phi())),
                                   doubled(kronecker(x.psi(), y.psi())),
                                   x.potential() * y.potential());
}

MfMorphism mult_tensor_morph_left(const MfMorphism& z, const MatrixFactorization& y) {
  const auto im = PolyMatrix::identity(y.size());
  return MfMorphism::make(mult_tensor(z.source(), y), mult_tensor(z.target(), y),
                          doubled(kronecker(z.alpha(), im)), doubled(kronecker(z.beta(), im)));
}

MfMorphism mult_tensor_morph_right(const MatrixFactorization& x, const MfMorphism& z) {
  const auto in = PolyMatrix::identity(x.size());
  return MfMorphism::make(mult_tensor(x, z.source()), mult_tensor(x, z.target()),
                          doubled(kronecker(in, z.alpha())), doubled(kronecker(in, z.beta())));
}

MfMorphism mult_tensor_morph_pair(const MfMorphism& zf, const MfMorphism& zg) {
  return MfMorphism::make(mult_tensor(zf.source(), zg.source()),
                          mult_tensor(zf.target(), zg.target()),
                          doubled(kronecker(zf.alpha(), zg.alpha())),
                          doubled(kronecker(zf.beta(), zg.beta())));
}

CheckReport check_syzygy_identity(const MatrixFactorization& x, const MatrixFactorization& y) {
  CheckReport r;
  r.check_id = "syzygy.identity";
  const auto lhs = syzygy(mult_tensor(x, y));
  const auto rhs = mult_tensor(syzygy(x), syzygy(y));
  const bool holds = lhs == rhs;
  r.verdict = verdict_for(holds, Expectation::Pass);
  r.detail = holds ? "Omega(X*Y) = Omega(X)*Omega(Y)" : "Omega(X*Y) differs from Omega(X)*Omega(Y)";
  r.add_witness("lhs.phi", lhs.phi());
  r.add_witness("rhs.phi", rhs.phi());
  return r;
}

CheckReport check_syzygy_inequalities(const MatrixFactorization& x, const MatrixFactorization& y) {
  CheckReport r;
  r.check_id = "syzygy.inequalities";
  r.literal_only = true;
  const auto ox = syzygy(x), oy = syzygy(y);
  const bool first = !(mult_tensor(x, y) == mult_tensor(ox, oy));
  const bool second = !(mult_tensor(ox, y) == mult_tensor(x, oy));
  const std::string observed = std::string("X*Y ") + (first ? "!=" : "==") +
                               " Omega(X)*Omega(Y), Omega(X)*Y " + (second ? "!=" : "==") +
                               " X*Omega(Y) (literal-only)";
  if (x.phi() == x.psi() && y.phi() == y.psi()) {
    r.expectation = Expectation::None;
    r.verdict = Verdict::Info;
    r.detail = "symmetric input: " + observed;
    return r;
  }
  r.verdict = verdict_for(first && second, Expectation::Pass);
  r.detail = observed;
  return r;
}

}  // namespace mfcat
