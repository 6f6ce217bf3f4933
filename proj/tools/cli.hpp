#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace refchoice::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes: 0 success, 1 substantive failure (axiom fails, recovery
/// impossible), 2 usage, parse or validation error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace refchoice::cli
