#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

namespace finrel::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 2,
  kDomainError = 3,
  kVerificationFailure = 4,
};

// Parses "0.9" or "90%" into a fraction. Percent values are divided by 100
// before any range check. Returns nullopt for text that is not a number.
std::optional<double> parse_probability(std::string_view text);

// Entry point behind the `finrel` executable. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace finrel::cli
