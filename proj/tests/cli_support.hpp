#pragma once
// Runs the command-line tool and checks file round trips through the C API.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "mfcat/mfcat.h"

namespace cli {

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Exit status of `mfcat <args>`, with stdout and stderr discarded.
inline int run(const std::string& args) {
  const std::string cmd = std::string("\"") + MFCAT_CLI + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

inline std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "mfcat_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

// validate twice: the canonical text is a fixed point and denotes the same
// factorization as the shipped file.
inline bool round_trips(const std::string& sample) {
  const std::filesystem::path src = std::filesystem::path(MFCAT_SAMPLES) / sample;
  const auto once = scratch(sample + ".1"), twice = scratch(sample + ".2");
  if (run("validate \"" + src.string() + "\" -o \"" + once.string() + "\"") != 0) return false;
  if (run("validate \"" + once.string() + "\" -o \"" + twice.string() + "\"") != 0) return false;
  const std::string a = slurp(src), b = slurp(once);
  if (b.empty() || b != slurp(twice)) return false;
  mfc_mf *x = nullptr, *y = nullptr;
  const bool parsed = mfc_mf_parse_file(a.c_str(), &x) == MFC_OK &&
                      mfc_mf_parse_file(b.c_str(), &y) == MFC_OK;
  const bool same = parsed && mfc_mf_equal(x, y) == 1;
  mfc_mf_free(x);
  mfc_mf_free(y);
  return same;
}

}  // namespace cli
