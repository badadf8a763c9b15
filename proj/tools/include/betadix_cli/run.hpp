#pragma once

#include <iosfwd>

#include "betadix_cli/manifest.hpp"

namespace betadix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitHypothesis = 2;

/// Runs one experiment, writing the report to `out` and diagnostics (progress,
/// errors as {"error": code, "message": ...}) to `err`. Returns 0 on success,
/// 2 when a mathematical hypothesis is rejected, 1 otherwise.
int run(const ExperimentManifest& m, std::ostream& out, std::ostream& err);

/// Stable error codes with one-line meanings, for --help.
std::string error_code_help();

}  // namespace betadix::cli
