#include "mfcat/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_map>

#include "mfcat/error.hpp"

namespace mfcat {

void check_size_guard(std::size_t rows, std::size_t cols) {
  if (rows > kMaxDimension || cols > kMaxDimension)
    throw Error(ErrorCode::SizeGuard, "matrix of shape " + std::to_string(rows) + "x" +
                                          std::to_string(cols) + " exceeds the size guard of " +
                                          std::to_string(kMaxDimension));
}

namespace {

void check_nonzero_guard(std::size_t nnz) {
  if (nnz > kMaxNonzeros)
    throw Error(ErrorCode::SizeGuard,
                "matrix with " + std::to_string(nnz) + " nonzero entries exceeds the size guard");
}

std::string shape(const PolyMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Start offsets of each row's entries; offsets[r]..offsets[r+1].
std::vector<std::size_t> row_offsets(const PolyMatrix& m) {
  std::vector<std::size_t> offsets(m.rows() + 1, 0);
  for (const auto& e : m.entries()) ++offsets[e.row + 1];
  for (std::size_t r = 0; r < m.rows(); ++r) offsets[r + 1] += offsets[r];
  return offsets;
}

// Memoizes a binary operation on value indices of two matrices.
class PairMemo {
 public:
  static constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

  PairMemo(std::size_t na, std::size_t nb) : nb_(nb) {
    if (na * nb <= 1 << 16) dense_.assign(na * nb, kUnset);
  }

  template <class Compute>
  std::uint32_t get(std::uint32_t a, std::uint32_t b, Compute&& compute) {
    if (!dense_.empty()) {
      auto& slot = dense_[a * nb_ + b];
      if (slot == kUnset) slot = compute();
      return slot;
    }
    const std::uint64_t key = (std::uint64_t{a} << 32) | b;
    auto it = sparse_.find(key);
    if (it != sparse_.end()) return it->second;
    const std::uint32_t v = compute();
    sparse_.emplace(key, v);
    return v;
  }

 private:
  std::size_t nb_;
  std::vector<std::uint32_t> dense_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
};

}  // namespace

// Accumulates entries (in row-major order) and interns their values.
class MatrixBuilder {
 public:
  MatrixBuilder(std::size_t rows, std::size_t cols) : impl_(std::make_shared<PolyMatrix::Impl>()) {
    check_size_guard(rows, cols);
    impl_->rows = rows;
    impl_->cols = cols;
  }

  std::uint32_t intern(Polynomial p) {
    auto it = index_.find(p);
    if (it != index_.end()) return it->second;
    const auto v = static_cast<std::uint32_t>(impl_->values.size());
    index_.emplace(p, v);
    impl_->values.push_back(std::move(p));
    return v;
  }

  // Interns every value of m; returns the index translation.
  std::vector<std::uint32_t> import_values(const PolyMatrix& m) {
    std::vector<std::uint32_t> map;
    map.reserve(m.values().size());
    for (const auto& v : m.values()) map.push_back(intern(v));
    return map;
  }

  void reserve(std::size_t n) {
    check_nonzero_guard(n);
    impl_->entries.reserve(n);
  }

  void push(std::size_t row, std::size_t col, std::uint32_t value) {
    impl_->entries.push_back(
        {static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col), value});
  }

  PolyMatrix finish(bool sorted = true) {
    if (!sorted) {
      std::sort(impl_->entries.begin(), impl_->entries.end(), [](const auto& a, const auto& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
      });
    }
    check_nonzero_guard(impl_->entries.size());
    return PolyMatrix(std::shared_ptr<const PolyMatrix::Impl>(std::move(impl_)));
  }

 private:
  std::shared_ptr<PolyMatrix::Impl> impl_;
  std::unordered_map<Polynomial, std::uint32_t, PolynomialHash> index_;
};

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) {
  check_size_guard(rows, cols);
  auto impl = std::make_shared<Impl>();
  impl->rows = rows;
  impl->cols = cols;
  impl_ = std::move(impl);
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  MatrixBuilder b(n, n);
  b.reserve(n);
  const auto one = b.intern(Polynomial(1));
  for (std::size_t i = 0; i < n; ++i) b.push(i, i, one);
  return b.finish();
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<Polynomial>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  for (const auto& row : rows)
    if (row.size() != c) throw Error(ErrorCode::Dimension, "ragged matrix rows");
  MatrixBuilder b(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!rows[i][j].is_zero()) b.push(i, j, b.intern(rows[i][j]));
  return b.finish();
}

PolyMatrix PolyMatrix::padded_identity(std::size_t n, std::size_t extra, bool horizontal) {
  MatrixBuilder b(horizontal ? n : n + extra, horizontal ? n + extra : n);
  b.reserve(n);
  const auto one = b.intern(Polynomial(1));
  for (std::size_t i = 0; i < n; ++i) b.push(i, i, one);
  return b.finish();
}

PolyMatrix PolyMatrix::from_entries(std::size_t rows, std::size_t cols,
                                    std::vector<Triplet> entries) {
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  MatrixBuilder b(rows, cols);
  b.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size();) {
    const auto& t = entries[i];
    if (t.row >= rows || t.col >= cols)
      throw Error(ErrorCode::Dimension, "entry (" + std::to_string(t.row) + ", " +
                                            std::to_string(t.col) + ") outside " +
                                            std::to_string(rows) + "x" + std::to_string(cols));
    Polynomial sum = t.value;
    std::size_t k = i + 1;
    for (; k < entries.size() && entries[k].row == t.row && entries[k].col == t.col; ++k)
      sum += entries[k].value;
    if (!sum.is_zero()) b.push(t.row, t.col, b.intern(std::move(sum)));
    i = k;
  }
  return b.finish();
}

Polynomial PolyMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows() || col >= cols())
    throw Error(ErrorCode::Dimension, "index (" + std::to_string(row) + ", " + std::to_string(col) +
                                          ") out of range for " + shape(*this) + " matrix");
  const auto& es = impl_->entries;
  auto it = std::lower_bound(es.begin(), es.end(), std::pair{row, col},
                             [](const Entry& e, const std::pair<std::size_t, std::size_t>& key) {
                               return e.row != key.first ? e.row < key.first : e.col < key.second;
                             });
  if (it != es.end() && it->row == row && it->col == col) return impl_->values[it->value];
  return Polynomial{};
}

PolyMatrix PolyMatrix::transpose() const {
  auto impl = std::make_shared<Impl>();
  impl->rows = cols();
  impl->cols = rows();
  impl->values = impl_->values;
  impl->entries.reserve(impl_->entries.size());
  for (const auto& e : impl_->entries) impl->entries.push_back({e.col, e.row, e.value});
  std::sort(impl->entries.begin(), impl->entries.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return PolyMatrix(std::shared_ptr<const Impl>(std::move(impl)));
}

PolyMatrix PolyMatrix::operator-() const {
  auto impl = std::make_shared<Impl>(*impl_);
  for (auto& v : impl->values) v = -v;
  return PolyMatrix(std::shared_ptr<const Impl>(std::move(impl)));
}

PolyMatrix PolyMatrix::scaled(const Polynomial& p) const {
  if (p.is_zero()) return PolyMatrix(rows(), cols());
  if (p.is_one()) return *this;
  auto impl = std::make_shared<Impl>(*impl_);
  for (auto& v : impl->values) v = v * p;  // Q[x] is a domain: products stay nonzero
  return PolyMatrix(std::shared_ptr<const Impl>(std::move(impl)));
}

PolyMatrix transpose(const PolyMatrix& a) { return a.transpose(); }

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::Dimension,
                "cannot multiply " + shape(a) + " matrix by " + shape(b) + " matrix");
  MatrixBuilder out(a.rows(), b.cols());
  const auto b_rows = row_offsets(b);
  const auto& be = b.entries();
  PairMemo memo(a.values().size(), b.values().size());

  struct Contribution {
    std::uint32_t col;
    std::uint32_t va;
    std::uint32_t vb;
  };
  std::vector<Contribution> contrib;
  const auto& ae = a.entries();
  std::size_t i = 0;
  while (i < ae.size()) {
    const std::uint32_t row = ae[i].row;
    contrib.clear();
    for (; i < ae.size() && ae[i].row == row; ++i) {
      const auto k = ae[i].col;
      for (std::size_t t = b_rows[k]; t < b_rows[k + 1]; ++t)
        contrib.push_back({be[t].col, ae[i].value, be[t].value});
    }
    if (!std::is_sorted(contrib.begin(), contrib.end(),
                        [](const auto& x, const auto& y) { return x.col < y.col; }))
      std::stable_sort(contrib.begin(), contrib.end(),
                       [](const auto& x, const auto& y) { return x.col < y.col; });
    std::size_t g = 0;
    while (g < contrib.size()) {
      std::size_t h = g + 1;
      while (h < contrib.size() && contrib[h].col == contrib[g].col) ++h;
      if (h == g + 1) {
        const auto& c = contrib[g];
        out.push(row, c.col, memo.get(c.va, c.vb, [&] {
          return out.intern(a.values()[c.va] * b.values()[c.vb]);
        }));
      } else {
        Polynomial sum;
        for (std::size_t t = g; t < h; ++t)
          sum += a.values()[contrib[t].va] * b.values()[contrib[t].vb];
        if (!sum.is_zero()) out.push(row, contrib[g].col, out.intern(std::move(sum)));
      }
      g = h;
    }
  }
  return out.finish();
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::Dimension, "cannot add " + shape(a) + " and " + shape(b) + " matrices");
  MatrixBuilder out(a.rows(), a.cols());
  const auto map_a = out.import_values(a);
  const auto map_b = out.import_values(b);
  const auto& ae = a.entries();
  const auto& be = b.entries();
  std::size_t i = 0, j = 0;
  auto before = [](const PolyMatrix::Entry& x, const PolyMatrix::Entry& y) {
    return x.row != y.row ? x.row < y.row : x.col < y.col;
  };
  while (i < ae.size() || j < be.size()) {
    if (j == be.size() || (i < ae.size() && before(ae[i], be[j]))) {
      out.push(ae[i].row, ae[i].col, map_a[ae[i].value]);
      ++i;
    } else if (i == ae.size() || before(be[j], ae[i])) {
      out.push(be[j].row, be[j].col, map_b[be[j].value]);
      ++j;
    } else {
      Polynomial s = a.value_of(ae[i]) + b.value_of(be[j]);
      if (!s.is_zero()) out.push(ae[i].row, ae[i].col, out.intern(std::move(s)));
      ++i;
      ++j;
    }
  }
  return out.finish();
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }

bool first_difference(const PolyMatrix& a, const PolyMatrix& b, std::size_t& row,
                      std::size_t& col) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    row = col = 0;
    return true;
  }
  // 0 = unknown, 1 = equal, 2 = different
  std::vector<std::uint8_t> same(a.values().size() * b.values().size(), 0);
  const auto nb = b.values().size();
  const auto& ae = a.entries();
  const auto& be = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ae.size() || j < be.size()) {
    const bool take_a = j == be.size() ||
                        (i < ae.size() && (ae[i].row != be[j].row ? ae[i].row < be[j].row
                                                                  : ae[i].col < be[j].col));
    const bool take_b = i == ae.size() ||
                        (j < be.size() && (be[j].row != ae[i].row ? be[j].row < ae[i].row
                                                                  : be[j].col < ae[i].col));
    if (take_a) {
      row = ae[i].row;
      col = ae[i].col;
      return true;
    }
    if (take_b) {
      row = be[j].row;
      col = be[j].col;
      return true;
    }
    auto& s = same[ae[i].value * nb + be[j].value];
    if (s == 0) s = a.value_of(ae[i]) == b.value_of(be[j]) ? 1 : 2;
    if (s == 2) {
      row = ae[i].row;
      col = ae[i].col;
      return true;
    }
    ++i;
    ++j;
  }
  return false;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.nonzero_count() != b.nonzero_count()) return false;
  std::size_t r, c;
  return !first_difference(a, b, r, c);
}

std::string PolyMatrix::to_literal() const {
  std::string out = "[";
  const auto offsets = row_offsets(*this);
  for (std::size_t r = 0; r < rows(); ++r) {
    if (r > 0) out += ", ";
    out += '[';
    std::size_t t = offsets[r];
    for (std::size_t c = 0; c < cols(); ++c) {
      if (c > 0) out += ", ";
      if (t < offsets[r + 1] && impl_->entries[t].col == c) {
        out += canonical_string(impl_->values[impl_->entries[t].value]);
        ++t;
      } else {
        out += '0';
      }
    }
    out += ']';
  }
  out += ']';
  return out;
}

PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  check_size_guard(rows, cols);
  MatrixBuilder out(rows, cols);
  out.reserve(a.nonzero_count() * b.nonzero_count());
  const auto a_rows = row_offsets(a);
  const auto b_rows = row_offsets(b);
  const auto& ae = a.entries();
  const auto& be = b.entries();
  PairMemo memo(a.values().size(), b.values().size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a_rows[i] == a_rows[i + 1]) continue;
    for (std::size_t k = 0; k < b.rows(); ++k) {
      for (std::size_t s = a_rows[i]; s < a_rows[i + 1]; ++s) {
        for (std::size_t t = b_rows[k]; t < b_rows[k + 1]; ++t) {
          const auto v = memo.get(ae[s].value, be[t].value, [&] {
            return out.intern(a.value_of(ae[s]) * b.value_of(be[t]));
          });
          out.push(i * b.rows() + k, std::size_t{ae[s].col} * b.cols() + be[t].col, v);
        }
      }
    }
  }
  return out.finish();
}

PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c,
                    const PolyMatrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
      b.cols() != d.cols())
    throw Error(ErrorCode::Dimension, "block shapes do not conform: " + shape(a) + ", " +
                                          shape(b) + ", " + shape(c) + ", " + shape(d));
  MatrixBuilder out(a.rows() + c.rows(), a.cols() + b.cols());
  out.reserve(a.nonzero_count() + b.nonzero_count() + c.nonzero_count() + d.nonzero_count());
  auto append_band = [&](const PolyMatrix& left, const PolyMatrix& right, std::size_t row0) {
    const auto map_l = out.import_values(left);
    const auto map_r = out.import_values(right);
    const auto lo = row_offsets(left);
    const auto ro = row_offsets(right);
    for (std::size_t r = 0; r < left.rows(); ++r) {
      for (std::size_t t = lo[r]; t < lo[r + 1]; ++t) {
        const auto& e = left.entries()[t];
        out.push(row0 + r, e.col, map_l[e.value]);
      }
      for (std::size_t t = ro[r]; t < ro[r + 1]; ++t) {
        const auto& e = right.entries()[t];
        out.push(row0 + r, left.cols() + e.col, map_r[e.value]);
      }
    }
  };
  append_band(a, b, 0);
  append_band(c, d, a.rows());
  return out.finish();
}

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b) {
  return block2x2(a, PolyMatrix(a.rows(), b.cols()), PolyMatrix(b.rows(), a.cols()), b);
}

bool is_sub_permutation01(const PolyMatrix& a) {
  std::vector<bool> col_used(a.cols(), false);
  const auto& es = a.entries();
  for (std::size_t t = 0; t < es.size(); ++t) {
    if (!a.value_of(es[t]).is_one()) return false;
    if (t > 0 && es[t - 1].row == es[t].row) return false;
    if (col_used[es[t].col]) return false;
    col_used[es[t].col] = true;
  }
  return true;
}

bool is_permutation_matrix(const PolyMatrix& a) {
  return a.is_square() && a.nonzero_count() == a.rows() && is_sub_permutation01(a);
}

// ---------------------------------------------------------------------------
// Literal parsing

namespace {

class MatrixParser {
 public:
  explicit MatrixParser(std::string_view text) : text_(text) {}

  PolyMatrix parse() {
    std::vector<std::vector<Polynomial>> rows;
    expect('[');
    skip_ws();
    if (peek_is(']')) fail("matrix must have at least one row");
    while (true) {
      rows.push_back(parse_row());
      skip_ws();
      if (peek_is(',')) {
        ++pos_;
        continue;
      }
      expect(']');
      break;
    }
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters after matrix literal");
    for (std::size_t r = 1; r < rows.size(); ++r)
      if (rows[r].size() != rows[0].size())
        throw ParseError("matrix row " + std::to_string(r + 1) + " has " +
                             std::to_string(rows[r].size()) + " entries, expected " +
                             std::to_string(rows[0].size()),
                         pos_);
    return PolyMatrix::from_rows(rows);
  }

 private:
  std::vector<Polynomial> parse_row() {
    expect('[');
    std::vector<Polynomial> row;
    while (true) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' &&
             text_[pos_] != '[')
        ++pos_;
      if (pos_ == text_.size()) fail("unterminated matrix row");
      if (text_[pos_] == '[') fail("unexpected '['");
      try {
        row.push_back(parse_polynomial(text_.substr(start, pos_ - start)));
      } catch (const ParseError& e) {
        throw ParseError("matrix entry at position " + std::to_string(start) + ": " + e.what(),
                         start + e.position());
      }
      if (text_[pos_] == ']') {
        ++pos_;
        return row;
      }
      ++pos_;  // ','
    }
  }

  void expect(char c) {
    skip_ws();
    if (!peek_is(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool peek_is(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("matrix syntax error at position " + std::to_string(pos_) + ": " + msg, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyMatrix parse_matrix(std::string_view text) { return MatrixParser(text).parse(); }

}  // namespace mfcat
