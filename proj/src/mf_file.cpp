#include "mfcat/mf_file.hpp"

#include <algorithm>
#include <optional>

#include "mfcat/error.hpp"

namespace mfcat {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Field {
  std::string text;
  std::size_t line = 0;  // line of the key
};

int bracket_balance(std::string_view s) {
  int depth = 0;
  for (char c : s) depth += c == '[' ? 1 : c == ']' ? -1 : 0;
  return depth;
}

// Re-raises a parse error of a field value with the file line it occurred on.
[[noreturn]] void relocate(const ParseError& e, const Field& f, const std::string& key) {
  const std::size_t pos = std::min(e.position(), f.text.size());
  const std::size_t line = f.line + static_cast<std::size_t>(
                                        std::count(f.text.begin(), f.text.begin() + pos, '\n'));
  throw ParseError(key + ": " + e.what(), e.position(), line);
}

}  // namespace

MatrixFactorization parse_mf_file(std::string_view text) {
  std::optional<Field> potential, phi, psi;
  std::optional<Field>* open = nullptr;  // matrix still missing closing brackets
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);

    if (open) {
      (*open)->text += '\n';
      (*open)->text += line;
      if (bracket_balance((*open)->text) <= 0) open = nullptr;
      continue;
    }
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected 'key = value'", 0, line_no);
    const std::string key(trim(line.substr(0, eq)));
    std::optional<Field>* slot = key == "potential" ? &potential
                                 : key == "phi"     ? &phi
                                 : key == "psi"     ? &psi
                                                    : nullptr;
    if (!slot) throw ParseError("unknown key '" + key + "'", 0, line_no);
    if (slot->has_value()) throw ParseError("duplicate key '" + key + "'", 0, line_no);
    *slot = Field{std::string(trim(line.substr(eq + 1))), line_no};
    if (key != "potential" && bracket_balance((*slot)->text) > 0) open = slot;
  }
  if (open) throw ParseError("unbalanced brackets at end of file", text.size(), line_no);
  if (!potential) throw ParseError("missing 'potential'", text.size(), line_no);
  if (!phi) throw ParseError("missing 'phi'", text.size(), line_no);
  if (!psi) throw ParseError("missing 'psi'", text.size(), line_no);

  Polynomial f;
  PolyMatrix mphi, mpsi;
  try {
    f = parse_polynomial(potential->text);
  } catch (const ParseError& e) {
    relocate(e, *potential, "potential");
  }
  try {
    mphi = parse_matrix(phi->text);
  } catch (const ParseError& e) {
    relocate(e, *phi, "phi");
  }
  try {
    mpsi = parse_matrix(psi->text);
  } catch (const ParseError& e) {
    relocate(e, *psi, "psi");
  }
  return MatrixFactorization::make(std::move(mphi), std::move(mpsi), std::move(f));
}

std::string print_mf_file(const MatrixFactorization& x) {
  return "potential = " + canonical_string(x.potential()) + "\nphi = " + x.phi().to_literal() +
         "\npsi = " + x.psi().to_literal() + "\n";
}

}  // namespace mfcat
