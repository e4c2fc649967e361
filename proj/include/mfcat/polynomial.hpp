#pragma once

// Exact multivariate polynomials over Q.
//
// A Polynomial is an immutable-by-convention value: a list of terms kept in
// strictly decreasing graded-lexicographic order, no zero coefficients, and
// no variable stored with exponent zero. Variables are identified by name and
// compared alphabetically, so the canonical form does not depend on the
// order in which polynomials were built or parsed.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mfcat {

using Rational = mpq_class;

class Monomial {
 public:
  using Factor = std::pair<std::string, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(std::string name, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint64_t degree() const noexcept;
  std::uint32_t exponent_of(std::string_view name) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Graded-lex comparison: <0 if a precedes b in printing order (a is larger).
  friend int grlex_compare(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::vector<Factor> factors_;  // sorted by name, exponents > 0
};

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long value);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Rational& value);
  Polynomial(const Rational& coefficient, Monomial monomial);

  static Polynomial variable(const std::string& name, std::uint32_t exponent = 1);
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept;
  bool is_constant() const noexcept;
  // Constant coefficient; zero when absent.
  Rational constant_term() const;
  std::uint64_t total_degree() const noexcept;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::size_t hash() const noexcept;

  // Checks the representation invariants (ordering, nonzero coefficients,
  // positive exponents). Used by tests as an audit hook.
  bool audit() const;

 private:
  std::vector<Term> terms_;
};

struct PolynomialHash {
  std::size_t operator()(const Polynomial& p) const noexcept { return p.hash(); }
};

// Parses the textual form:
//   poly   := term (('+'|'-') term)*
//   term   := ['-'] ( coeff ['*'] factor ('*' factor)* | factor ('*' factor)* | coeff )
//   factor := var ['^' nat]
//   coeff  := nat ['/' nat]
//   var    := letter (letter | digit | '_')*
// Whitespace is insignificant. Throws ParseError.
Polynomial parse_polynomial(std::string_view text);

// Deterministic printing in graded-lex order, e.g. "x^2 + y^2", "3/2*x*y", "0".
std::string canonical_string(const Polynomial& p);

}  // namespace mfcat
