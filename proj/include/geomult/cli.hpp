// Batch command-line front end: argument parsing, validation, JSON output,
// and exit-code policy.
//
// Exit codes: 0 success, 2 validation/usage error, 3 internal invariant
// violation (NotPositive / NotDivisible / NotMonomial / Unbounded /
// GaussUndefined), 4 enumeration cap exceeded.  All errors are also
// emitted as a structured JSON object on the error stream.

#pragma once

#include <ostream>

namespace geomult {

// Run the CLI with explicit streams (testable in-process).  argv follows
// main() conventions: argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace geomult
