#include "mfcat/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>

#include "mfcat/error.hpp"

namespace mfcat {

namespace {

// Monomials ordered so that the map iterates in printing order.
struct GrlexBefore {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return grlex_compare(a, b) < 0;
  }
};

std::size_t hash_mpz(const mpz_class& z) noexcept {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    const auto limb = static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i));
    h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void hash_combine(std::size_t& seed, std::size_t value) noexcept {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::string name, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(std::move(name), exponent);
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& [name, e] : factors_) d += e;
  return d;
}

std::uint32_t Monomial::exponent_of(std::string_view name) const noexcept {
  for (const auto& [n, e] : factors_)
    if (n == name) return e;
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    const int c = ia->first.compare(ib->first);
    if (c < 0) {
      out.factors_.push_back(*ia++);
    } else if (c > 0) {
      out.factors_.push_back(*ib++);
    } else {
      const std::uint64_t e = std::uint64_t{ia->second} + ib->second;
      if (e > std::numeric_limits<std::uint32_t>::max())
        throw Error(ErrorCode::InvalidArgument, "exponent overflow in monomial product");
      out.factors_.emplace_back(ia->first, static_cast<std::uint32_t>(e));
      ++ia;
      ++ib;
    }
  }
  out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
  out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
  return out;
}

int grlex_compare(const Monomial& a, const Monomial& b) noexcept {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db ? -1 : 1;
  // Lex on the exponent vector indexed by alphabetically sorted variables.
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  for (; ia != a.factors_.end() && ib != b.factors_.end(); ++ia, ++ib) {
    const int c = ia->first.compare(ib->first);
    if (c != 0) return c < 0 ? -1 : 1;  // the earlier variable is present only in one
    if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
  }
  if (ia != a.factors_.end()) return -1;
  if (ib != b.factors_.end()) return 1;
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(long value) {
  if (value != 0) terms_.push_back({Monomial{}, Rational(value)});
}

Polynomial::Polynomial(const Rational& value) {
  if (sgn(value) != 0) {
    terms_.push_back({Monomial{}, value});
    terms_.back().coefficient.canonicalize();
  }
}

Polynomial::Polynomial(const Rational& coefficient, Monomial monomial) {
  if (sgn(coefficient) != 0) {
    terms_.push_back({std::move(monomial), coefficient});
    terms_.back().coefficient.canonicalize();
  }
}

Polynomial Polynomial::variable(const std::string& name, std::uint32_t exponent) {
  return Polynomial(Rational(1), Monomial::variable(name, exponent));
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Rational, GrlexBefore> acc;
  for (auto& t : terms) {
    auto [it, inserted] = acc.try_emplace(std::move(t.monomial), t.coefficient);
    if (!inserted) it->second += t.coefficient;
  }
  Polynomial p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coefficient == 1;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return Rational(0);
}

std::uint64_t Polynomial::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  out.terms_.reserve(p.terms_.size() + q.terms_.size());
  auto ip = p.terms_.begin();
  auto iq = q.terms_.begin();
  while (ip != p.terms_.end() && iq != q.terms_.end()) {
    const int c = grlex_compare(ip->monomial, iq->monomial);
    if (c < 0) {
      out.terms_.push_back(*ip++);
    } else if (c > 0) {
      out.terms_.push_back(*iq++);
    } else {
      Rational sum = ip->coefficient + iq->coefficient;
      if (sgn(sum) != 0) out.terms_.push_back({ip->monomial, std::move(sum)});
      ++ip;
      ++iq;
    }
  }
  out.terms_.insert(out.terms_.end(), ip, p.terms_.end());
  out.terms_.insert(out.terms_.end(), iq, q.terms_.end());
  return out;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial{};
  if (p.is_one()) return q;
  if (q.is_one()) return p;
  std::map<Monomial, Rational, GrlexBefore> acc;
  for (const auto& a : p.terms_) {
    for (const auto& b : q.terms_) {
      Rational c = a.coefficient * b.coefficient;
      auto [it, inserted] = acc.try_emplace(a.monomial * b.monomial, c);
      if (!inserted) it->second += c;
    }
  }
  Polynomial out;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.terms_.push_back({m, c});
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) { return *this = *this + q; }
Polynomial& Polynomial::operator*=(const Polynomial& q) { return *this = *this * q; }

std::size_t Polynomial::hash() const noexcept {
  std::size_t seed = terms_.size();
  for (const auto& t : terms_) {
    for (const auto& [name, e] : t.monomial.factors()) {
      hash_combine(seed, std::hash<std::string>{}(name));
      hash_combine(seed, e);
    }
    hash_combine(seed, hash_mpz(t.coefficient.get_num()));
    hash_combine(seed, hash_mpz(t.coefficient.get_den()));
  }
  return seed;
}

bool Polynomial::audit() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (sgn(t.coefficient) == 0) return false;
    if (t.coefficient.get_den() <= 0) return false;
    if (gcd(t.coefficient.get_num(), t.coefficient.get_den()) != 1) return false;
    const auto& f = t.monomial.factors();
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (f[k].second == 0 || f[k].first.empty()) return false;
      if (k > 0 && f[k - 1].first >= f[k].first) return false;
    }
    if (i > 0 && grlex_compare(terms_[i - 1].monomial, t.monomial) >= 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      fail("unexpected '+'");
    }
    terms.push_back(parse_term(negative));
    skip_ws();
    while (!at_end()) {
      const char op = peek();
      if (op != '+' && op != '-') fail(std::string("unexpected character '") + op + "'");
      ++pos_;
      skip_ws();
      bool neg = op == '-';
      // A sign directly after the operator, e.g. "x + -y".
      if (!at_end() && peek() == '-') {
        neg = !neg;
        ++pos_;
      }
      terms.push_back(parse_term(neg));
      skip_ws();
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  Term parse_term(bool negative) {
    skip_ws();
    if (at_end()) fail("expected a term");
    Rational coeff(1);
    Monomial mono;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coefficient();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !is_var_start(peek())) fail("expected a variable after '*'");
      }
      if (!at_end() && is_var_start(peek())) {
        mono = parse_factor();
        have_factor = true;
      }
    } else if (is_var_start(peek())) {
      mono = parse_factor();
      have_factor = true;
    } else {
      fail(std::string("unexpected character '") + peek() + "'");
    }
    if (have_factor) {
      skip_ws();
      while (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !is_var_start(peek())) fail("expected a variable after '*'");
        mono = mono * parse_factor();
        skip_ws();
      }
    }
    if (negative) coeff = -coeff;
    return Term{std::move(mono), std::move(coeff)};
  }

  Monomial parse_factor() {
    const std::size_t start = pos_;
    ++pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    skip_ws();
    std::uint32_t exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t epos = pos_;
      const std::string digits = parse_nat();
      if (digits.size() > 10 || std::stoull(digits) > std::numeric_limits<std::uint32_t>::max())
        fail_at("exponent overflow", epos);
      exponent = static_cast<std::uint32_t>(std::stoull(digits));
    }
    return Monomial::variable(std::move(name), exponent);
  }

  Rational parse_coefficient() {
    const std::size_t start = pos_;
    mpz_class num(parse_nat());
    mpz_class den(1);
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("malformed rational: expected denominator");
      den = mpz_class(parse_nat());
      if (den == 0) fail_at("malformed rational: zero denominator", start);
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::string parse_nat() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected a natural number");
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool is_var_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ParseError("polynomial syntax error at position " + std::to_string(at) + ": " + msg, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

std::string canonical_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = sgn(t.coefficient) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.coefficient);
    const bool unit = mag == 1;
    if (t.monomial.is_one()) {
      out += mag.get_str();
      continue;
    }
    if (!unit) {
      out += mag.get_str();
      out += '*';
    }
    bool first_factor = true;
    for (const auto& [name, e] : t.monomial.factors()) {
      if (!first_factor) out += '*';
      first_factor = false;
      out += name;
      if (e != 1) {
        out += '^';
        out += std::to_string(e);
      }
    }
  }
  return out;
}

}  // namespace mfcat
