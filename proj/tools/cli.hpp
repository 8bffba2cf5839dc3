#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidcert::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kInputError = 2,
  kNotEquivalent = 3,
  kBudgetExhausted = 4,
};

/// Runs one command line (args[0] is the program name). Payload arguments
/// naming "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace braidcert::cli
