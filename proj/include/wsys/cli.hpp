#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wsys::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kParse = 2,
  kSemantic = 3,
  kCapExceeded = 4,
};

// Runs one command; args exclude the program name. Reads stdin from `in`
// when no input path (or "-") is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wsys::cli
