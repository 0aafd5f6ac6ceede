#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sumsets/int_set.hpp"

namespace sumsets::cli {

/// Exit codes shared by every command and output format.
enum ExitCode : int { exit_pass = 0, exit_verdict_failure = 1, exit_usage = 2 };

/// Inclusive (h, k) rectangle from "h=a..b,k=c..d".
struct Grid {
  Int h_lo = 0, h_hi = 0, k_lo = 0, k_hi = 0;
};

/// Comma-separated integers, whitespace ignored, negatives allowed. The
/// elements need not be sorted; duplicates are rejected.
IntSet parse_set_literal(std::string_view text);
Grid parse_grid(std::string_view text);

/// args excludes the program name. Output goes to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumsets::cli
