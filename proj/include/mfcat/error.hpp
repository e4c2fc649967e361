#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mfcat {

enum class ErrorCode {
  Parse = 1,
  Dimension,
  SizeGuard,
  NotSquare,
  SizeMismatch,
  ProductMismatch,
  PotentialMismatch,
  ShapeMismatch,
  SquareFailure,
  Composability,
  NotEquivalent,
  AssociativityMismatch,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Position is a 0-based byte offset into the parsed text; line is 1-based
// (0 when the text was not line-oriented).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, std::size_t line = 0)
      : Error(ErrorCode::Parse, what), position_(position), line_(line) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

// phi*psi or psi*phi differs from f*I at (row, col).
class ProductMismatch : public Error {
 public:
  ProductMismatch(const std::string& what, std::size_t row, std::size_t col)
      : Error(ErrorCode::ProductMismatch, what), row_(row), col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class SquareFailure : public Error {
 public:
  enum class Which { PhiSquare, PsiSquare };

  SquareFailure(const std::string& what, Which which)
      : Error(ErrorCode::SquareFailure, what), which_(which) {}

  Which which() const noexcept { return which_; }

 private:
  Which which_;
};

}  // namespace mfcat
