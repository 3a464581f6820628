#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jacquet::cli
{

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

// Runs one invocation; args excludes the program name. Reports go to out,
// diagnostics to err.
int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace jacquet::cli
