#pragma once

// Rectangular matrices of polynomials.
//
// Storage is sparse: a row-major sorted list of (row, col, value-index)
// triplets plus a table of the distinct nonzero polynomial values. Kronecker
// products of structured matrices repeat a handful of values many times, so
// products are computed once per pair of distinct values. Values are
// immutable after construction and share their storage on copy.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mfcat/polynomial.hpp"

namespace mfcat {

// Largest permitted row or column count of any matrix.
inline constexpr std::size_t kMaxDimension = std::size_t{1} << 20;
// Largest permitted number of stored nonzero entries.
inline constexpr std::size_t kMaxNonzeros = std::size_t{1} << 25;

// Throws Error(SizeGuard) if a rows x cols result would exceed the guard.
void check_size_guard(std::size_t rows, std::size_t cols);

class PolyMatrix {
 public:
  struct Triplet {
    std::size_t row;
    std::size_t col;
    Polynomial value;
  };
  struct Entry {
    std::uint32_t row;
    std::uint32_t col;
    std::uint32_t value;  // index into values()
  };

  // rows x cols zero matrix.
  PolyMatrix(std::size_t rows, std::size_t cols);
  PolyMatrix() : PolyMatrix(0, 0) {}

  static PolyMatrix identity(std::size_t n);
  // Dense construction; every row must have the same length.
  static PolyMatrix from_rows(const std::vector<std::vector<Polynomial>>& rows);
  // Sparse construction; duplicate positions are summed.
  static PolyMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<Triplet> entries);
  // (I_n, 0_{n, extra}) when horizontal, its transpose otherwise.
  static PolyMatrix padded_identity(std::size_t n, std::size_t extra, bool horizontal);

  std::size_t rows() const noexcept { return impl_->rows; }
  std::size_t cols() const noexcept { return impl_->cols; }
  bool is_square() const noexcept { return rows() == cols(); }
  std::size_t nonzero_count() const noexcept { return impl_->entries.size(); }
  bool is_zero() const noexcept { return impl_->entries.empty(); }

  Polynomial at(std::size_t row, std::size_t col) const;
  const std::vector<Entry>& entries() const noexcept { return impl_->entries; }
  const std::vector<Polynomial>& values() const noexcept { return impl_->values; }
  const Polynomial& value_of(const Entry& e) const { return impl_->values[e.value]; }

  PolyMatrix transpose() const;
  PolyMatrix operator-() const;
  // Multiplies every entry by p.
  PolyMatrix scaled(const Polynomial& p) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  // First (row, col) in row-major order where a and b differ; false when equal.
  friend bool first_difference(const PolyMatrix& a, const PolyMatrix& b, std::size_t& row,
                               std::size_t& col);

  std::string to_literal() const;

 private:
  struct Impl {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Polynomial> values;
    std::vector<Entry> entries;
  };
  explicit PolyMatrix(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  friend class MatrixBuilder;
  std::shared_ptr<const Impl> impl_;
};

PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b);
// [[a, 0], [0, b]]
PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b);
// [[a, b], [c, d]]; a/b and c/d share row counts, a/c and b/d column counts.
PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c,
                    const PolyMatrix& d);
PolyMatrix transpose(const PolyMatrix& a);

// Every entry is 0 or 1 and each row and column holds at most one 1.
bool is_sub_permutation01(const PolyMatrix& a);
// Square (1,0)-matrix with exactly one 1 per row and column.
bool is_permutation_matrix(const PolyMatrix& a);

// Matrix literal: `[[x, -y], [y, x]]`.
PolyMatrix parse_matrix(std::string_view text);

}  // namespace mfcat
