#include "mfcat/factorization.hpp"

#include <string>

#include "mfcat/error.hpp"

namespace mfcat {

namespace {

std::string shape(const PolyMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void check_product(const PolyMatrix& product, const PolyMatrix& expected, const char* which) {
  std::size_t r = 0, c = 0;
  if (first_difference(product, expected, r, c))
    throw ProductMismatch(std::string(which) + " differs from f*I at entry (" +
                              std::to_string(r) + ", " + std::to_string(c) + "): got " +
                              canonical_string(product.at(r, c)) + ", expected " +
                              canonical_string(expected.at(r, c)),
                          r, c);
}

}  // namespace

MatrixFactorization MatrixFactorization::make(PolyMatrix phi, PolyMatrix psi,
                                              Polynomial potential) {
  if (!phi.is_square() || !psi.is_square())
    throw Error(ErrorCode::NotSquare,
                "factorization matrices must be square, got " + shape(phi) + " and " + shape(psi));
  if (phi.rows() != psi.rows())
    throw Error(ErrorCode::SizeMismatch, "phi is " + shape(phi) + " but psi is " + shape(psi));
  if (phi.rows() == 0) throw Error(ErrorCode::SizeMismatch, "factorization size must be positive");
  const PolyMatrix expected = PolyMatrix::identity(phi.rows()).scaled(potential);
  check_product(phi * psi, expected, "phi*psi");
  check_product(psi * phi, expected, "psi*phi");
  return MatrixFactorization(
      std::make_shared<const Data>(Data{std::move(potential), std::move(phi), std::move(psi)}));
}

bool operator==(const MatrixFactorization& a, const MatrixFactorization& b) {
  if (a.data_ == b.data_) return true;
  return a.size() == b.size() && a.potential() == b.potential() && a.phi() == b.phi() &&
         a.psi() == b.psi();
}

MatrixFactorization syzygy(const MatrixFactorization& x) {
  return MatrixFactorization::make(x.psi(), x.phi(), x.potential());
}

MfMorphism MfMorphism::make(MatrixFactorization source, MatrixFactorization target,
                            PolyMatrix alpha, PolyMatrix beta) {
  if (source.potential() != target.potential())
    throw Error(ErrorCode::PotentialMismatch,
                "source potential " + canonical_string(source.potential()) +
                    " differs from target potential " + canonical_string(target.potential()));
  const std::size_t n1 = source.size();
  const std::size_t n2 = target.size();
  for (const PolyMatrix* m : {&alpha, &beta})
    if (m->rows() != n2 || m->cols() != n1)
      throw Error(ErrorCode::ShapeMismatch, "morphism matrices must be " + std::to_string(n2) +
                                                "x" + std::to_string(n1) + ", got " + shape(*m));
  if (alpha * source.phi() != target.phi() * beta)
    throw SquareFailure("alpha*phi_source != phi_target*beta", SquareFailure::Which::PhiSquare);
  if (target.psi() * alpha != beta * source.psi())
    throw SquareFailure("psi_target*alpha != beta*psi_source", SquareFailure::Which::PsiSquare);
  return MfMorphism(std::move(source), std::move(target), std::move(alpha), std::move(beta));
}

MfMorphism MfMorphism::identity(const MatrixFactorization& x) {
  const auto id = PolyMatrix::identity(x.size());
  return MfMorphism(x, x, id, id);
}

bool operator==(const MfMorphism& a, const MfMorphism& b) {
  return a.alpha() == b.alpha() && a.beta() == b.beta() && a.source() == b.source() &&
         a.target() == b.target();
}

MfMorphism compose(const MfMorphism& g, const MfMorphism& f) {
  if (!(f.target() == g.source()))
    throw Error(ErrorCode::Composability,
                "cannot compose: target of the first morphism (size " +
                    std::to_string(f.target().size()) +
                    ") is not the source of the second (size " + std::to_string(g.source().size()) +
                    ")");
  return MfMorphism::make(f.source(), g.target(), g.alpha() * f.alpha(), g.beta() * f.beta());
}

}  // namespace mfcat
