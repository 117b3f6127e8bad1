#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sympf/scalar.hpp"

namespace sympf {

enum ExitCode : int { kExitPass = 0, kExitViolation = 1, kExitUsage = 2 };

struct RunConfig {
  int n = 0;
  FieldSpec field;
  std::uint64_t seed = 1;
  int degree = -1;
  std::vector<int> shape;
  int points = 10;
  int count = 50;
  std::string mode = "symp";  // straighten: dcp | symp
  std::string input = "-";
  std::string output;          // empty: stdout
  std::string report = "text"; // text | json
  bool timing = false;
};

// `args` excludes the program name. Writes the report to `out` (or to the
// configured output file) and diagnostics to `err`; returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sympf
