#pragma once

#include <iosfwd>

namespace closedfactors::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kUsage = 2,
  kMismatch = 3,
};

/// Entry point of the command-line tool, with injectable streams. `in` is
/// read when no input file is given or the file is "-".
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace closedfactors::cli
