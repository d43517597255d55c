#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "freevertex/error.hpp"

namespace freevertex::cli {

/// Exit codes of the command-line front end.
enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,  // parse errors, bad parameters, shape mismatches
  kGenerationFailed = 3,
  kPrecondition = 4,
  kNotTwoColorable = 5,
  kInternal = 6,
  kTooLarge = 7,
};

int exit_code(ErrorKind kind) noexcept;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freevertex::cli
