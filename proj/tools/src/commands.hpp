#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace acurv::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kPrecondition = 3,
  kSignature = 4,
};

// Entry point of the `acurv` executable, usable in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acurv::cli
