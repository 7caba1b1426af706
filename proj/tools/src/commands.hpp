#pragma once

#include <iosfwd>

namespace tqc::cli {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// Parses argv, dispatches, writes the document to out and diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tqc::cli
