#pragma once

#include <iosfwd>

#include "slocc/verify.hpp"

namespace slocc::cli {

enum ExitCode : int {
  ok = 0,
  inequivalent = 1,
  bad_input = 2,
  outside_field = 3,
  out_of_range = 4,
  verify_failed = 5,
};

/// The whole command line. `classifier` backs classify, equiv and verify.
int run(int argc, char** argv, const Classifier& classifier, std::ostream& out, std::ostream& err);

}  // namespace slocc::cli
