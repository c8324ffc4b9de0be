#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "orderdim/relation.hpp"

namespace orderdim::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kPrecondition = 3,
  kLimit = 4,
  kCounterexample = 5,
};

int exit_code(Errc code);

/// Runs one command line (without the program name). The primary artifact
/// goes to `out` (or to --out), diagnostics and witnesses to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace orderdim::cli
