#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qconx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvariant = 2;

/// Runs `qconx <subcommand> ...`; argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

/// First failed check of a construction document, or an empty string.
std::string verify_construction_text(const std::string& text, unsigned long long budget);
/// First failed check over scan records (one JSON object per line), or an empty string.
std::string verify_scan_text(const std::string& text, unsigned long long budget);

}  // namespace qconx::cli
