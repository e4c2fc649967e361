#pragma once

// Test helpers and independent oracles. The oracles deliberately avoid the
// library's arithmetic: polynomials are evaluated at rational points with GMP
// directly, and matrices are expanded densely entry by entry.

#include <map>
#include <string>
#include <vector>

#include "mfcat/matrix.hpp"
#include "mfcat/polynomial.hpp"

namespace support {

using mfcat::Polynomial;
using mfcat::PolyMatrix;
using mfcat::Rational;

inline Polynomial P(const std::string& s) { return mfcat::parse_polynomial(s); }
inline PolyMatrix M(const std::string& s) { return mfcat::parse_matrix(s); }

using Point = std::map<std::string, Rational>;

inline Rational eval(const Polynomial& p, const Point& at) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coefficient;
    for (const auto& [name, exp] : t.monomial.factors())
      for (std::uint32_t k = 0; k < exp; ++k) v *= at.at(name);
    sum += v;
  }
  return sum;
}

using Dense = std::vector<std::vector<Polynomial>>;

inline Dense dense(const PolyMatrix& m) {
  Dense d(m.rows(), std::vector<Polynomial>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.at(r, c);
  return d;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Dense out(n, std::vector<Polynomial>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = 0; t < k; ++t) out[i][j] += a[i][t] * b[t][j];
  return out;
}

inline Dense dense_kron(const Dense& a, const Dense& b) {
  const std::size_t ar = a.size(), ac = ar ? a[0].size() : 0;
  const std::size_t br = b.size(), bc = br ? b[0].size() : 0;
  Dense out(ar * br, std::vector<Polynomial>(ac * bc));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
  return out;
}

// [[a, b], [c, d]] from dense blocks.
inline Dense dense_blocks(const Dense& a, const Dense& b, const Dense& c, const Dense& d) {
  Dense out;
  for (std::size_t r = 0; r < a.size(); ++r) {
    auto row = a[r];
    row.insert(row.end(), b[r].begin(), b[r].end());
    out.push_back(row);
  }
  for (std::size_t r = 0; r < c.size(); ++r) {
    auto row = c[r];
    row.insert(row.end(), d[r].begin(), d[r].end());
    out.push_back(row);
  }
  return out;
}

inline Dense dense_zero(std::size_t r, std::size_t c) {
  return Dense(r, std::vector<Polynomial>(c));
}

inline Dense dense_identity(std::size_t n) {
  Dense d = dense_zero(n, n);
  for (std::size_t i = 0; i < n; ++i) d[i][i] = Polynomial(1);
  return d;
}

inline Dense dense_neg(Dense d) {
  for (auto& row : d)
    for (auto& v : row) v = -v;
  return d;
}

}  // namespace support
