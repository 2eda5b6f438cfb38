#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace houghton {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int negative = 1;  // distinct, not equal, not found
inline constexpr int unknown = 2;
inline constexpr int usage = 64;
inline constexpr int parse = 65;
}  // namespace exit_code

/// Runs one command line (without the program name) and returns the exit
/// code. All output goes to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace houghton
