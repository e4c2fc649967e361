// mfcat: validate, combine and check matrix factorizations.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mfcat/mfcat.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct InputError {
  std::string message;
};

struct MfDeleter {
  void operator()(mfc_mf* p) const { mfc_mf_free(p); }
};
using MfPtr = std::unique_ptr<mfc_mf, MfDeleter>;

struct StringDeleter {
  void operator()(char* p) const { mfc_string_free(p); }
};
using StrPtr = std::unique_ptr<char, StringDeleter>;

void check(mfc_status s, const std::string& context) {
  if (s != MFC_OK) throw InputError{context + ": " + mfc_status_name(s) + ": " + mfc_last_error()};
}

MfPtr load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path + ": cannot open file"};
  std::stringstream buf;
  buf << in.rdbuf();
  mfc_mf* raw = nullptr;
  check(mfc_mf_parse_file(buf.str().c_str(), &raw), path);
  return MfPtr(raw);
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out || !(out << text)) throw InputError{output + ": cannot write file"};
}

std::string printed(const mfc_mf* x) {
  char* raw = nullptr;
  check(mfc_mf_print_file(x, &raw), "print");
  return StrPtr(raw).get();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact matrix factorizations and coherence checks for the multiplicative tensor product"};
  app.require_subcommand(1);
  std::string output;

  std::string validate_in;
  auto* validate = app.add_subcommand("validate", "Validate a factorization file and print it canonically");
  validate->add_option("file", validate_in, "Factorization file")->required();
  validate->add_option("-o,--output", output, "Write output here instead of stdout");

  std::string mode = "mult";
  std::vector<std::string> tensor_in;
  auto* tensor = app.add_subcommand("tensor", "Tensor two factorizations");
  tensor->add_option("--mode", mode, "yoshino or mult")
      ->check(CLI::IsMember({"yoshino", "mult"}))
      ->capture_default_str();
  tensor->add_option("files", tensor_in, "Two factorization files")->required()->expected(2);
  tensor->add_option("-o,--output", output, "Write output here instead of stdout");

  std::string syzygy_in;
  auto* syzygy = app.add_subcommand("syzygy", "Swap phi and psi");
  syzygy->add_option("file", syzygy_in, "Factorization file")->required();
  syzygy->add_option("-o,--output", output, "Write output here instead of stdout");

  unsigned epower_n = 1;
  auto* epower = app.add_subcommand("epower", "Print e^n = (I, I) of size 2^(n-1)");
  epower->add_option("n", epower_n, "Exponent, at least 1")->required()->check(CLI::PositiveNumber);
  epower->add_option("-o,--output", output, "Write output here instead of stdout");

  std::string suite_name = "all";
  unsigned maxpow = 5, samples = 50;
  std::uint64_t seed = 0;
  std::string format = "text";
  auto* suite = app.add_subcommand("suite", "Run a check suite");
  suite->add_option("name", suite_name,
                    "all, t-semiunital, right-monoidal, pseudo-monoidal, counterexamples or tensor")
      ->capture_default_str();
  suite->add_option("--maxpow", maxpow, "Largest e-power exponent")->capture_default_str();
  suite->add_option("--samples", samples, "Random samples per property")->capture_default_str();
  suite->add_option("--seed", seed, "Random seed")->capture_default_str();
  suite->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  suite->add_option("-o,--output", output, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*validate) {
      emit(printed(load(validate_in).get()), output);
    } else if (*tensor) {
      auto a = load(tensor_in[0]);
      auto b = load(tensor_in[1]);
      mfc_mf* raw = nullptr;
      check(mfc_mf_tensor(a.get(), b.get(), mode == "yoshino" ? MFC_TENSOR_YOSHINO : MFC_TENSOR_MULT,
                          &raw),
            "tensor");
      emit(printed(MfPtr(raw).get()), output);
    } else if (*syzygy) {
      mfc_mf* raw = nullptr;
      check(mfc_mf_syzygy(load(syzygy_in).get(), &raw), "syzygy");
      emit(printed(MfPtr(raw).get()), output);
    } else if (*epower) {
      mfc_mf* raw = nullptr;
      check(mfc_mf_epower(epower_n, &raw), "epower");
      emit(printed(MfPtr(raw).get()), output);
    } else if (*suite) {
      mfc_reports* raw = nullptr;
      check(mfc_suite_run(suite_name.c_str(), maxpow, samples, seed, &raw), "suite");
      std::unique_ptr<mfc_reports, void (*)(mfc_reports*)> reports(raw, mfc_reports_free);
      char* text = nullptr;
      check(mfc_reports_format(reports.get(),
                               format == "structured" ? MFC_FORMAT_STRUCTURED : MFC_FORMAT_TEXT, &text),
            "format");
      emit(StrPtr(text).get(), output);
      return mfc_reports_ok(reports.get()) ? 0 : kExitFail;
    }
  } catch (const InputError& e) {
    std::cerr << "mfcat: " << e.message << "\n";
    return kExitInput;
  }
  return 0;
}
