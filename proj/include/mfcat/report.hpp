#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mfcat/factorization.hpp"
#include "mfcat/matrix.hpp"

namespace mfcat {

enum class Verdict { Pass, Fail, ExpectedFailConfirmed, Info };

// What the check is meant to show. None marks purely informational checks.
enum class Expectation { Pass, Fail, None };

struct Witness {
  std::string name;
  // Small matrices are kept verbatim; large ones are summarised.
  std::variant<PolyMatrix, std::string> value;
};

struct CheckReport {
  std::string check_id;
  Verdict verdict = Verdict::Fail;
  Expectation expectation = Expectation::Pass;
  bool literal_only = false;
  std::vector<Witness> witnesses;
  std::string detail;

  void add_witness(const std::string& name, const PolyMatrix& m);
  void add_witness(const std::string& name, const MfMorphism& m);
  void add_note(const std::string& name, std::string text);
};

// Largest rows*cols stored verbatim as a witness.
inline constexpr std::size_t kWitnessEntryLimit = 4096;

// Verdict for an observed outcome under an expectation:
// Pass expects `holds`, Fail expects `!holds`, None always gives Info.
Verdict verdict_for(bool holds, Expectation expectation);

const char* verdict_token(Verdict v) noexcept;  // PASS, FAIL, XFAIL-OK, INFO
const char* expectation_name(Expectation e) noexcept;

// `PASS <check_id> <detail>`
std::string report_line(const CheckReport& r);

// True when no report is Fail; Info and confirmed expected failures count as success.
bool aggregate_ok(const std::vector<CheckReport>& reports);

}  // namespace mfcat

namespace mfcat {

// Machine-readable form of a report list: aggregate verdict plus every field
// of every report; small witness matrices as literals.
std::string reports_to_json(const std::vector<CheckReport>& reports, int indent = 2);

}  // namespace mfcat
