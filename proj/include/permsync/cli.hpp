#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permsync {

inline constexpr const char* kVersion = "1.0.0";

/// Runs the command-line front end. args holds the tokens after the program
/// name; data goes to out, diagnostics to err. Returns the process exit code:
/// 0 success, 1 a checked property or certification failed, 2 usage or parse
/// error, 3 resource-guard rejection.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace permsync
