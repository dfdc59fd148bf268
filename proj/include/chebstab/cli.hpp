#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chebstab {

// Exit codes: 0 success / no violations, 1 violations found, 2 input or
// usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitInputError = 2;

// Entry point of the chebstab command-line tool. args excludes the program
// name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chebstab
