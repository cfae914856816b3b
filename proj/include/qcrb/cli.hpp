#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcrb/linalg.hpp"

namespace qcrb::cli {

inline constexpr const char* kVersion = "qcrb 1.0.0";

enum ExitCode { kOk = 0, kUsage = 2, kNumerical = 3 };

// `identity`, `diag:a,b,...` or row-major `a,b;c,d`. Throws ValidationError.
RMatrix parse_weight(const std::string& literal, int dim);

// `a,b,c` or inclusive `start:stop:step`. Throws ValidationError on an empty or malformed grid.
std::vector<double> parse_grid(const std::string& spec);

std::vector<double> parse_vector(const std::string& spec, std::size_t expected);

// Runs one command; args excludes the program name. Report goes to out (or the --path file),
// diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcrb::cli
