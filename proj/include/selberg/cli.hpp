#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "selberg/polynomial.hpp"

namespace selberg {

inline constexpr const char* kGeneratedBy = "selberg 0.1.0";

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitUsage = 64;

// One line of comma-separated decimal coefficients, lowest degree first.
// Blank lines and text after '#' are ignored.
IntPolynomial parse_polynomial_text(const std::string& text);
IntPolynomial read_polynomial_file(const std::string& path);

// args excludes the program name. Reports go to `out`, warnings and
// structured errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace selberg
