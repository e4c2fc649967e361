#include "mfcat/error.hpp"

namespace mfcat {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Dimension: return "dimension mismatch";
    case ErrorCode::SizeGuard: return "size guard exceeded";
    case ErrorCode::NotSquare: return "not square";
    case ErrorCode::SizeMismatch: return "size mismatch";
    case ErrorCode::ProductMismatch: return "product mismatch";
    case ErrorCode::PotentialMismatch: return "potential mismatch";
    case ErrorCode::ShapeMismatch: return "shape mismatch";
    case ErrorCode::SquareFailure: return "square failure";
    case ErrorCode::Composability: return "not composable";
    case ErrorCode::NotEquivalent: return "not permutation equivalent";
    case ErrorCode::AssociativityMismatch: return "associativity mismatch";
    case ErrorCode::InvalidArgument: return "invalid argument";
  }
  return "unknown error";
}

}  // namespace mfcat
