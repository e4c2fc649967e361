#include "mfcat/report.hpp"

#include <algorithm>

namespace mfcat {

void CheckReport::add_witness(const std::string& name, const PolyMatrix& m) {
  if (m.rows() * m.cols() <= kWitnessEntryLimit) {
    witnesses.push_back({name, m});
    return;
  }
  witnesses.push_back({name, std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                 " matrix, " + std::to_string(m.nonzero_count()) + " nonzeros"});
}

void CheckReport::add_witness(const std::string& name, const MfMorphism& m) {
  add_witness(name + ".alpha", m.alpha());
  add_witness(name + ".beta", m.beta());
}

void CheckReport::add_note(const std::string& name, std::string text) {
  witnesses.push_back({name, std::move(text)});
}

Verdict verdict_for(bool holds, Expectation expectation) {
  switch (expectation) {
    case Expectation::Pass: return holds ? Verdict::Pass : Verdict::Fail;
    case Expectation::Fail: return holds ? Verdict::Fail : Verdict::ExpectedFailConfirmed;
    case Expectation::None: return Verdict::Info;
  }
  return Verdict::Fail;
}

const char* verdict_token(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::ExpectedFailConfirmed: return "XFAIL-OK";
    case Verdict::Info: return "INFO";
  }
  return "FAIL";
}

const char* expectation_name(Expectation e) noexcept {
  switch (e) {
    case Expectation::Pass: return "pass";
    case Expectation::Fail: return "fail";
    case Expectation::None: return "none";
  }
  return "none";
}

std::string report_line(const CheckReport& r) {
  std::string line = verdict_token(r.verdict);
  line += ' ';
  line += r.check_id;
  if (!r.detail.empty()) {
    line += ' ';
    line += r.detail;
  }
  return line;
}

bool aggregate_ok(const std::vector<CheckReport>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const CheckReport& r) { return r.verdict == Verdict::Fail; });
}

}  // namespace mfcat

#include <json.hpp>

namespace mfcat {

std::string reports_to_json(const std::vector<CheckReport>& reports, int indent) {
  nlohmann::json out;
  out["aggregate"] = aggregate_ok(reports) ? "pass" : "fail";
  auto& list = out["reports"] = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& wit : r.witnesses) {
      if (const auto* m = std::get_if<PolyMatrix>(&wit.value))
        w.push_back({{"name", wit.name}, {"matrix", m->to_literal()}});
      else
        w.push_back({{"name", wit.name}, {"summary", std::get<std::string>(wit.value)}});
    }
    list.push_back({{"check_id", r.check_id},
                    {"verdict", verdict_token(r.verdict)},
                    {"expectation", expectation_name(r.expectation)},
                    {"literal_only", r.literal_only},
                    {"detail", r.detail},
                    {"witnesses", std::move(w)}});
  }
  return out.dump(indent) + "\n";
}

}  // namespace mfcat
