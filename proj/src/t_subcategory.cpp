#include "mfcat/t_subcategory.hpp"

#include <optional>
#include <string>
#include <vector>

#include "mfcat/error.hpp"
#include "mfcat/tensor.hpp"

namespace mfcat {

namespace {

std::size_t e_size(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "e-power exponent must be at least 1");
  if (n - 1 >= 63 || (std::size_t{1} << (n - 1)) > kMaxDimension)
    throw Error(ErrorCode::SizeGuard, "e^" + std::to_string(n) + " exceeds the size guard");
  return std::size_t{1} << (n - 1);
}


MfMorphism same_matrix(const MatrixFactorization& s, const MatrixFactorization& t,
                       const PolyMatrix& z) {
  return MfMorphism::make(s, t, z, z);
}

}  // namespace

MatrixFactorization e_power(unsigned n) {
  const auto id = PolyMatrix::identity(e_size(n));
  return MatrixFactorization::make(id, id, Polynomial(1));
}

bool is_e_power(const MatrixFactorization& x) {
  const std::size_t n = x.size();
  if (n == 0 || (n & (n - 1)) != 0 || !x.potential().is_one()) return false;
  const auto id = PolyMatrix::identity(n);
  return x.phi() == id && x.psi() == id;
}

bool is_t_morphism(const MfMorphism& m) {
  return is_e_power(m.source()) && is_e_power(m.target()) && m.alpha() == m.beta() &&
         is_sub_permutation01(m.alpha());
}

MfMorphism connecting_morphism(unsigned m, unsigned p) {
  const auto src = e_power(m), tgt = e_power(p);
  const std::size_t cols = src.size(), rows = tgt.size();
  PolyMatrix z;
  if (m > p)
    z = PolyMatrix::padded_identity(rows, cols - rows, true);
  else if (m < p)
    z = PolyMatrix::padded_identity(cols, rows - cols, false);
  else
    z = PolyMatrix::identity(rows);
  return same_matrix(src, tgt, z);
}

MfMorphism gamma(const MatrixFactorization& a) {
  const std::size_t n = a.size();
  return same_matrix(a, mult_tensor(unit_e(), a), PolyMatrix::padded_identity(n, n, false));
}

MfMorphism lambda_(const MatrixFactorization& a) {
  const std::size_t n = a.size();
  return same_matrix(mult_tensor(unit_e(), a), a, PolyMatrix::padded_identity(n, n, true));
}

MfMorphism rho(const MatrixFactorization& a) {
  const std::size_t n = a.size();
  return same_matrix(mult_tensor(a, unit_e()), a, PolyMatrix::padded_identity(n, n, true));
}

MfMorphism l_iso(const MatrixFactorization& a) {
  return same_matrix(mult_tensor(unit_e(), a), mult_tensor(a, unit_e()),
                     PolyMatrix::identity(2 * a.size()));
}

namespace {

std::pair<MatrixFactorization, MatrixFactorization> bracketings(const MatrixFactorization& a,
                                                                const MatrixFactorization& b,
                                                                const MatrixFactorization& c) {
  auto left = mult_tensor(mult_tensor(a, b), c);
  auto right = mult_tensor(a, mult_tensor(b, c));
  if (!(left == right))
    throw Error(ErrorCode::AssociativityMismatch,
                "(a*b)*c and a*(b*c) differ literally (first object of size " +
                    std::to_string(a.size()) + " is not scalar)");
  return {std::move(left), std::move(right)};
}

}  // namespace

MfMorphism associator(const MatrixFactorization& a, const MatrixFactorization& b,
                      const MatrixFactorization& c) {
  auto [left, right] = bracketings(a, b, c);
  return same_matrix(left, right, PolyMatrix::identity(left.size()));
}

MfMorphism associator_inverse(const MatrixFactorization& a, const MatrixFactorization& b,
                              const MatrixFactorization& c) {
  auto [left, right] = bracketings(a, b, c);
  return same_matrix(right, left, PolyMatrix::identity(left.size()));
}

PolyMatrix find_permutation_witness(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::NotEquivalent, "matrices differ in shape");
  if (!is_sub_permutation01(a) || !is_sub_permutation01(b))
    throw Error(ErrorCode::NotEquivalent, "inputs must be (1,0) sub-permutation matrices");
  const std::size_t rows = a.rows(), cols = a.cols();
  auto column_rows = [cols](const PolyMatrix& m) {
    std::vector<std::optional<std::size_t>> at(cols);
    for (const auto& e : m.entries()) at[e.col] = e.row;
    return at;
  };
  const auto ca = column_rows(a), cb = column_rows(b);
  std::vector<bool> used_a(rows, false), used_b(rows, false);
  std::vector<PolyMatrix::Triplet> p;
  for (std::size_t j = 0; j < cols; ++j) {
    if (ca[j].has_value() != cb[j].has_value())
      throw Error(ErrorCode::NotEquivalent,
                  "column " + std::to_string(j) + " is zero in only one of the matrices");
    if (!ca[j]) continue;
    p.push_back({*cb[j], *ca[j], Polynomial(1)});
    used_a[*ca[j]] = used_b[*cb[j]] = true;
  }
  std::size_t ia = 0, ib = 0;
  for (;;) {
    while (ia < rows && used_a[ia]) ++ia;
    while (ib < rows && used_b[ib]) ++ib;
    if (ia == rows || ib == rows) break;
    p.push_back({ib++, ia++, Polynomial(1)});
  }
  return PolyMatrix::from_entries(rows, rows, std::move(p));
}

}  // namespace mfcat
