#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chshlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` unless an --output file is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chshlab
