#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace levelnum::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_size_limit = 2,
  exit_bad_certificate = 3,
};

/// Runs one command. `args` excludes the program name. Graph arguments are
/// a file path, "-" for `in`, or a family name such as K5, K3,3, C7, P4 or M16.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace levelnum::cli
