#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flowshop::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // parse, solve or write failure
inline constexpr int kExitUsage = 2;

// Runs the `flowshop` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// One line describing the published 83-vs-85 discrepancy, or empty when
// `content_hash` is not the published 7x4 example.
std::string erratum_note_for(unsigned long long content_hash);

}  // namespace flowshop::cli
