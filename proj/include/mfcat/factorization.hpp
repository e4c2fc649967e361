#pragma once

#include <cstddef>
#include <memory>

#include "mfcat/matrix.hpp"
#include "mfcat/polynomial.hpp"

namespace mfcat {

/// An n x n matrix factorization (phi, psi) of a potential f:
/// phi * psi = psi * phi = f * I_n, checked exactly on construction.
///
/// Copies are cheap; the data is shared and immutable.
class MatrixFactorization {
 public:
  /// Validates by two exact matrix products. Throws Error(NotSquare),
  /// Error(SizeMismatch) or ProductMismatch with the first offending entry.
  static MatrixFactorization make(PolyMatrix phi, PolyMatrix psi, Polynomial potential);

  const Polynomial& potential() const noexcept { return data_->potential; }
  const PolyMatrix& phi() const noexcept { return data_->phi; }
  const PolyMatrix& psi() const noexcept { return data_->psi; }
  std::size_t size() const noexcept { return data_->phi.rows(); }

  /// Literal equality of potential, size and both matrices.
  friend bool operator==(const MatrixFactorization& a, const MatrixFactorization& b);

 private:
  struct Data {
    Polynomial potential;
    PolyMatrix phi;
    PolyMatrix psi;
  };
  explicit MatrixFactorization(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

inline bool mf_equal(const MatrixFactorization& a, const MatrixFactorization& b) { return a == b; }

/// Omega((phi, psi)) = (psi, phi).
MatrixFactorization syzygy(const MatrixFactorization& x);

/// A morphism (alpha, beta): X1 -> X2 in MF(f); both matrices are n2 x n1 and
///   alpha * phi1 = phi2 * beta,   psi2 * alpha = beta * psi1.
class MfMorphism {
 public:
  /// Throws Error(PotentialMismatch), Error(ShapeMismatch) or SquareFailure.
  static MfMorphism make(MatrixFactorization source, MatrixFactorization target, PolyMatrix alpha,
                         PolyMatrix beta);
  static MfMorphism identity(const MatrixFactorization& x);

  const MatrixFactorization& source() const noexcept { return source_; }
  const MatrixFactorization& target() const noexcept { return target_; }
  const PolyMatrix& alpha() const noexcept { return alpha_; }
  const PolyMatrix& beta() const noexcept { return beta_; }

  /// Component-wise equality of (alpha, beta) together with source and target.
  friend bool operator==(const MfMorphism& a, const MfMorphism& b);

 private:
  MfMorphism(MatrixFactorization s, MatrixFactorization t, PolyMatrix a, PolyMatrix b)
      : source_(std::move(s)), target_(std::move(t)), alpha_(std::move(a)), beta_(std::move(b)) {}

  MatrixFactorization source_;
  MatrixFactorization target_;
  PolyMatrix alpha_;
  PolyMatrix beta_;
};

/// g o f. Throws Error(Composability) unless f.target() == g.source().
MfMorphism compose(const MfMorphism& g, const MfMorphism& f);

inline MfMorphism morphism_identity(const MatrixFactorization& x) { return MfMorphism::identity(x); }

}  // namespace mfcat
