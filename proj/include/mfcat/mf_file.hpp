#pragma once

// Factorization files:
//
//   # comment
//   potential = x^2 + y^2
//   phi = [[x, -y],
//          [y, x]]
//   psi = [[x, y], [-y, x]]
//
// A matrix value may continue over several lines until its brackets balance.

#include <string>
#include <string_view>

#include "mfcat/factorization.hpp"

namespace mfcat {

// Throws ParseError (with a 1-based line) or the validation error of
// MatrixFactorization::make.
MatrixFactorization parse_mf_file(std::string_view text);

// Canonical form; parse_mf_file(print_mf_file(x)) == x.
std::string print_mf_file(const MatrixFactorization& x);

}  // namespace mfcat
