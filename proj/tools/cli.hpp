#pragma once

#include <iosfwd>

namespace sumdex::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kUnknown = 2,
  kValidationFailure = 3,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sumdex::cli
