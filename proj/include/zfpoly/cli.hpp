#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "zfpoly/graph.hpp"

namespace zfp::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kSizeCap = 3,
  kMethodMismatch = 4,
};

/// A parsed --family argument such as "wheel:6" or "cycle-chord:6:0:2".
struct FamilySpec {
  std::string name;
  std::vector<int> sizes;  // numeric arguments
  std::string binary;      // threshold string
};

/// Throws ParseError for unknown names or malformed arguments.
FamilySpec parse_family(std::string_view text);
/// Throws PreconditionError when the family's size constraints are violated.
Graph build_family(const FamilySpec& spec);

/// Runs the command line `args` (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zfp::cli
