#include "mfcat/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "mfcat/error.hpp"
#include "mfcat/t_subcategory.hpp"

namespace mfcat {

namespace {

const std::vector<std::string> kVars = {"x", "y", "z"};

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Polynomial random_monomial(Rng& rng, const std::vector<std::string>& vars, unsigned degree) {
  Polynomial m(1);
  for (unsigned d = 0; d < degree; ++d) m *= Polynomial::variable(vars[uniform(rng, 0, vars.size() - 1)]);
  return m;
}

Polynomial nonzero_polynomial(Rng& rng, const std::vector<std::string>& vars, unsigned max_degree) {
  for (;;) {
    Polynomial p = random_polynomial(rng, vars, max_degree, 2);
    if (!p.is_zero()) return p;
  }
}

ElementaryOp random_op(Rng& rng, std::size_t size) {
  if (size == 1) return {ElementaryOp::Kind::Negate, 0, 0, Polynomial()};
  const std::size_t i = uniform(rng, 0, size - 1);
  std::size_t j = uniform(rng, 0, size - 2);
  if (j >= i) ++j;
  switch (uniform(rng, 0, 5)) {
    case 0: return {ElementaryOp::Kind::Swap, i, j, Polynomial()};
    case 1: return {ElementaryOp::Kind::Negate, i, 0, Polynomial()};
    default:
      return {ElementaryOp::Kind::Transvection, i, j, nonzero_polynomial(rng, kVars, 1)};
  }
}

// The elementary matrix of op and its inverse.
std::pair<PolyMatrix, PolyMatrix> elementary(std::size_t n, const ElementaryOp& op) {
  using T = PolyMatrix::Triplet;
  std::vector<T> e, inv;
  switch (op.kind) {
    case ElementaryOp::Kind::Transvection:
      for (std::size_t k = 0; k < n; ++k) e.push_back({k, k, Polynomial(1)});
      inv = e;
      e.push_back({op.i, op.j, op.multiplier});
      inv.push_back({op.i, op.j, -op.multiplier});
      break;
    case ElementaryOp::Kind::Swap:
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t c = k == op.i ? op.j : k == op.j ? op.i : k;
        e.push_back({k, c, Polynomial(1)});
      }
      inv = e;
      break;
    case ElementaryOp::Kind::Negate:
      for (std::size_t k = 0; k < n; ++k) e.push_back({k, k, Polynomial(k == op.i ? -1 : 1)});
      inv = e;
      break;
  }
  return {PolyMatrix::from_entries(n, n, std::move(e)), PolyMatrix::from_entries(n, n, std::move(inv))};
}

// Unimodular pair (M, M^-1) from random elementary operations.
std::pair<PolyMatrix, PolyMatrix> random_unimodular(Rng& rng, std::size_t n, std::size_t k) {
  PolyMatrix m = PolyMatrix::identity(n), inv = PolyMatrix::identity(n);
  for (std::size_t t = 0; t < k; ++t) {
    auto [e, einv] = elementary(n, random_op(rng, n));
    m = e * m;
    inv = inv * einv;
  }
  return {m, inv};
}

}  // namespace

Polynomial random_polynomial(Rng& rng, const std::vector<std::string>& vars,
                             unsigned max_degree, unsigned max_terms, int coeff_bound) {
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  Polynomial p;
  const std::size_t terms = uniform(rng, 0, max_terms);
  for (std::size_t t = 0; t < terms; ++t) {
    const auto degree = static_cast<unsigned>(uniform(rng, 0, max_degree));
    p += Polynomial(coeff(rng)) * random_monomial(rng, vars, degree);
  }
  return p;
}

PolyMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                         const std::vector<std::string>& vars, unsigned max_degree) {
  std::vector<PolyMatrix::Triplet> entries;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      entries.push_back({r, c, random_polynomial(rng, vars, max_degree, 2)});
  return PolyMatrix::from_entries(rows, cols, std::move(entries));
}

MatrixFactorization elementary_mf1(std::size_t size, const std::vector<ElementaryOp>& ops) {
  PolyMatrix m = PolyMatrix::identity(size), inv = PolyMatrix::identity(size);
  for (const auto& op : ops) {
    if (op.i >= size || (op.kind != ElementaryOp::Kind::Negate && (op.j >= size || op.i == op.j)))
      throw Error(ErrorCode::InvalidArgument, "elementary operation indices out of range");
    auto [e, einv] = elementary(size, op);
    m = e * m;
    inv = inv * einv;
  }
  return MatrixFactorization::make(m, inv, Polynomial(1));
}

MatrixFactorization random_mf1(Rng& rng, std::size_t size, std::size_t num_elementary) {
  if (size == 0) throw Error(ErrorCode::InvalidArgument, "size must be positive");
  auto [m, inv] = random_unimodular(rng, size, num_elementary);
  return MatrixFactorization::make(m, inv, Polynomial(1));
}

MatrixFactorization random_mf1(std::uint64_t seed, std::size_t size, std::size_t num_elementary) {
  Rng rng(seed);
  return random_mf1(rng, size, num_elementary);
}

MatrixFactorization random_mf(Rng& rng, std::size_t max_size) {
  const std::size_t n = uniform(rng, 1, max_size);
  const Polynomial g1 = nonzero_polynomial(rng, kVars, 1);
  const Polynomial g2 = nonzero_polynomial(rng, kVars, 1);
  const Polynomial f = g1 * g2;
  std::vector<PolyMatrix::Triplet> p, q;
  for (std::size_t i = 0; i < n; ++i) {
    switch (uniform(rng, 0, 3)) {
      case 0: p.push_back({i, i, Polynomial(1)}); q.push_back({i, i, f}); break;
      case 1: p.push_back({i, i, f}); q.push_back({i, i, Polynomial(1)}); break;
      case 2: p.push_back({i, i, g2}); q.push_back({i, i, g1}); break;
      default: p.push_back({i, i, g1}); q.push_back({i, i, g2}); break;
    }
  }
  auto [a, ainv] = random_unimodular(rng, n, 2);
  auto [b, binv] = random_unimodular(rng, n, 2);
  const PolyMatrix dp = PolyMatrix::from_entries(n, n, std::move(p));
  const PolyMatrix dq = PolyMatrix::from_entries(n, n, std::move(q));
  return MatrixFactorization::make(a * dp * b, binv * dq * ainv, f);
}

MfMorphism random_mf1_morphism(Rng& rng, const MatrixFactorization& source,
                               const MatrixFactorization& target) {
  const PolyMatrix delta = random_matrix(rng, target.size(), source.size(), kVars, 1);
  return MfMorphism::make(source, target, delta, target.psi() * delta * source.phi());
}

MfMorphism random_t_morphism(Rng& rng, unsigned m, unsigned p) {
  const auto src = e_power(m);
  const auto tgt = e_power(p);
  const std::size_t rows = tgt.size(), cols = src.size();
  std::vector<std::size_t> row_order(rows), col_order(cols);
  std::iota(row_order.begin(), row_order.end(), 0);
  std::iota(col_order.begin(), col_order.end(), 0);
  std::shuffle(row_order.begin(), row_order.end(), rng);
  std::shuffle(col_order.begin(), col_order.end(), rng);
  const std::size_t k = uniform(rng, 0, std::min(rows, cols));
  std::vector<PolyMatrix::Triplet> entries;
  for (std::size_t t = 0; t < k; ++t) entries.push_back({row_order[t], col_order[t], Polynomial(1)});
  const PolyMatrix z = PolyMatrix::from_entries(rows, cols, std::move(entries));
  return MfMorphism::make(src, tgt, z, z);
}

}  // namespace mfcat
