#pragma once

#include <iosfwd>

#include "cli/config.hpp"

namespace viscowave::cli {

enum ExitStatus { kOk = 0, kConfigFailure = 2, kNumericalFailure = 3, kIoFailure = 4 };

/// Runs one command and writes its CSV to `out`. Returns 0, or 3 when a
/// verification fails or `--path both` exceeds the discrepancy limit.
/// Library errors propagate.
int execute(const RunConfig& config, std::ostream& out);

/// Full command-line entry point: parsing, execution, output file handling
/// and the mapping of failures to exit statuses.
int run_main(int argc, const char* const* argv);

}  // namespace viscowave::cli
