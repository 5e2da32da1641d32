#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linspace::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitInternal = 2;

/// Runs one command line (without the program name). Reports go to `out` as
/// a single JSON document, except `gen` and text-mode `enum` which stream
/// instances. Returns 0, 1 (input is not a valid instance) or 2 (a theorem
/// check failed).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace linspace::cli
