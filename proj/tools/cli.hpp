#pragma once

#include <iosfwd>

namespace ratrel::cli {

/// Runs one command line. Verdicts go to @p out, diagnostics to @p err.
/// Returns 0 unless parsing, file access or validation failed.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ratrel::cli
