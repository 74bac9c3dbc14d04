#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilhodge::cli {

// Exit statuses scripts can branch on.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;       // bad arguments, unreadable or malformed input
inline constexpr int kExitAxiom = 2;       // Jacobi, nilpotency, conjugation or grading failure
inline constexpr int kExitConditionW = 3;  // check-w / check-grading verdict is negative

/// Runs one command line (program name excluded). Reports go to `out`,
/// diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nilhodge::cli
